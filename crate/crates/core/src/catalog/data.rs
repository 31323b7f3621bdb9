//! Frozen catalog tables. Vertex labels in this file are 1-based to match
//! the printed names; loaders shift them to 0-based indices.

/// Named tournaments, serialized over 0-based indices (label k -> index k-1).
pub(crate) const NAMED: &[(&str, usize, &str)] = &[
    ("3A", 3, "101"),
    ("4A", 4, "110101"),
    ("4B", 4, "100100"),
    ("5A", 5, "1100110111"),
    ("5B", 5, "1110110101"),
    ("5C", 5, "1010110101"),
    ("5D", 5, "1101100110"),
    ("5E", 5, "1100100111"),
    ("6A", 6, "100101110010101"),
    ("6B", 6, "101100110100011"),
    ("6C", 6, "100011001001100"),
    ("6D", 6, "111001100111111"),
    ("6E", 6, "111001100110111"),
    ("6F", 6, "100101001100010"),
    ("6G", 6, "001100010001001"),
    ("6H", 6, "101101110110011"),
    ("6I", 6, "001110110001001"),
    ("6J", 6, "001110111001000"),
    ("6K", 6, "101100110000001"),
    ("6L", 6, "110011001001100"),
    ("6N", 6, "100001000000101"),
    ("7A", 7, "110100110101101110111"),
    ("7B", 7, "100001000010001100100"),
    ("7C", 7, "100001100010001100100"),
    ("7D", 7, "111100111001011111111"),
    ("7E", 7, "111100000111011111111"),
    ("7F", 7, "010011000110011100101"),
    ("7G", 7, "100010100100011101010"),
    ("7H", 7, "101101011010000000111"),
    ("7I", 7, "001101011011101011100"),
    ("7J", 7, "010000000001110101111"),
    ("7K", 7, "111000111001110111111"),
    ("8A", 8, "1110100110100110101101110111"),
    ("8B", 8, "0100000000000111011011111111"),
];

/// Finite path exceptions: id, tournament, outpath blocks, non-origin
/// labels, witness paths (one digit per vertex label).
pub(crate) struct ExcRow {
    pub id: usize,
    pub name: &'static str,
    pub blocks: &'static [usize],
    pub s: &'static [usize],
    pub witnesses: &'static [&'static str],
}

macro_rules! exc {
    ($id:expr, $name:expr, $blocks:expr, $s:expr, $w:expr) => {
        ExcRow {
            id: $id,
            name: $name,
            blocks: &$blocks,
            s: &$s,
            witnesses: &$w,
        }
    };
}

pub(crate) const FINITE_EXCEPTIONS: &[ExcRow] = &[
    exc!(0, "3A", [1, 1], [1, 2, 3], []),
    exc!(1, "4A", [1, 1, 1], [1, 2, 3], ["4213"]),
    exc!(2, "4A", [1, 2], [3, 4], ["1324", "2314"]),
    exc!(3, "4A", [2, 1], [1, 2], ["3421", "4132"]),
    exc!(4, "5A", [1, 1, 1, 1], [1, 2, 3, 4, 5], []),
    exc!(5, "5B", [2, 1, 1], [1, 2, 3], ["45213", "51423"]),
    exc!(6, "5C", [1, 1, 2], [4, 5], ["12534", "23514", "31524"]),
    exc!(7, "5C", [2, 1, 1], [1, 2, 3, 4], ["51423"]),
    exc!(8, "5D", [1, 1, 1, 1], [2, 5], ["12543", "35124", "42153"]),
    exc!(9, "5E", [1, 1, 1, 1], [2, 4, 5], ["12453", "35421"]),
    exc!(10, "5E", [1, 2, 1], [3, 5], ["12435", "23145", "45312"]),
    exc!(11, "5E", [2, 2], [1, 2], ["34215", "42315", "52314"]),
    exc!(12, "5E", [1, 1, 2], [1, 2], ["35412", "41523", "51423"]),
    exc!(
        13,
        "6A",
        [3, 1, 1],
        [3, 4],
        ["156324", "256143", "562341", "612345"]
    ),
    exc!(
        14,
        "6B",
        [2, 1, 1, 1],
        [3, 4],
        ["154326", "254316", "562143", "612345"]
    ),
    exc!(15, "6C", [1, 1, 2, 1], [1, 2, 3, 6], ["435261", "534261"]),
    exc!(
        16,
        "6C",
        [1, 2, 1, 1],
        [4, 5, 6],
        ["163425", "263415", "362415"]
    ),
    exc!(
        17,
        "6D",
        [2, 1, 1, 1],
        [2, 4, 6],
        ["124365", "346521", "562143"]
    ),
    exc!(
        18,
        "6D",
        [1, 2, 2],
        [2, 4, 6],
        ["126345", "341562", "564123"]
    ),
    exc!(
        19,
        "6D",
        [1, 1, 1, 2],
        [2, 4, 6],
        ["125643", "341265", "563421"]
    ),
    exc!(
        20,
        "6E",
        [1, 1, 1, 1, 1],
        [1, 2],
        ["341256", "465213", "516324", "621435"]
    ),
    exc!(
        21,
        "6E",
        [2, 1, 1, 1],
        [1, 2],
        ["346521", "452136", "562143", "634125"]
    ),
    exc!(
        22,
        "6F",
        [1, 1, 1, 1, 1],
        [1, 2, 3],
        ["421563", "532641", "613452"]
    ),
    exc!(
        23,
        "6G",
        [1, 1, 1, 1, 1],
        [4, 6],
        ["145632", "216453", "326415", "546132"]
    ),
    exc!(
        24,
        "6H",
        [1, 1, 1, 1, 1],
        [1, 2, 3, 4],
        ["543162", "613425"]
    ),
    exc!(
        25,
        "6H",
        [1, 1, 1, 2],
        [4, 5],
        ["142536", "243516", "341526", "613452"]
    ),
    exc!(
        26,
        "6H",
        [1, 1, 3],
        [4, 5, 6],
        ["145623", "245631", "345612"]
    ),
    exc!(
        27,
        "6H",
        [1, 3, 1],
        [4, 6],
        ["126534", "236514", "316524", "543261"]
    ),
    exc!(
        28,
        "6H",
        [2, 1, 2],
        [4, 5],
        ["124563", "234561", "314562", "614235"]
    ),
    exc!(
        29,
        "6I",
        [1, 1, 1, 1, 1],
        [4, 6],
        ["145632", "213654", "365421", "546231"]
    ),
    exc!(
        30,
        "6J",
        [1, 1, 1, 1, 1],
        [4, 6],
        ["162453", "261453", "312465", "542631"]
    ),
    exc!(
        31,
        "6K",
        [1, 2, 2],
        [3, 4],
        ["146532", "246531", "541632", "634125"]
    ),
    exc!(
        32,
        "6L",
        [1, 2, 1, 1],
        [5, 6],
        ["163425", "263415", "361425", "456132"]
    ),
    exc!(33, "7A", [1, 1, 1, 1, 1, 1], [1, 2, 3, 4, 5, 6, 7], []),
    exc!(
        34,
        "7B",
        [1, 1, 2, 1, 1],
        [1, 2, 3],
        ["4576132", "5674132", "6475132", "7541263"]
    ),
    exc!(
        35,
        "7B",
        [2, 1, 3],
        [1, 2, 3],
        ["4315627", "5316427", "6314527", "7435612"]
    ),
    exc!(
        36,
        "7B",
        [2, 3, 1],
        [1, 2],
        ["3125476", "4567132", "5647132", "6457132", "7421356"]
    ),
    exc!(
        37,
        "7C",
        [1, 1, 1, 1, 1, 1],
        [4, 5, 6],
        ["1243567", "2341567", "3142567", "7541632"]
    ),
    exc!(
        38,
        "7C",
        [1, 1, 2, 1, 1],
        [1, 2, 3],
        ["4156327", "5164327", "6145327", "7541263"]
    ),
    exc!(
        39,
        "7C",
        [2, 1, 3],
        [1, 2, 3],
        ["4315627", "5316427", "6314527", "7435612"]
    ),
    exc!(
        40,
        "7D",
        [1, 1, 1, 2, 1],
        [1, 2],
        ["3412756", "4512736", "5312746", "6215437", "7215436"]
    ),
    exc!(
        41,
        "7D",
        [1, 1, 1, 3],
        [6, 7],
        ["1546327", "2546317", "3745216", "4753216", "5734216"]
    ),
    exc!(
        42,
        "7D",
        [2, 2, 1, 1],
        [6, 7],
        ["1342675", "2341675", "3465127", "4563127", "5364127"]
    ),
    exc!(
        43,
        "7E",
        [1, 1, 2, 1, 1],
        [2, 7],
        ["1236745", "3214756", "4213756", "5213746", "6734215"]
    ),
    exc!(
        44,
        "7F",
        [1, 1, 1, 3],
        [6, 7],
        ["1732546", "2713546", "3721546", "4127635", "5127634"]
    ),
    exc!(
        45,
        "7G",
        [2, 1, 2, 1],
        [1, 7],
        ["2654317", "3654721", "4367125", "5367124", "6517234"]
    ),
    exc!(
        46,
        "7H",
        [2, 2, 2],
        [4, 7],
        ["1746532", "2746531", "3126574", "5321674", "6247531"]
    ),
    exc!(
        47,
        "7I",
        [1, 1, 2, 1, 1],
        [4, 5, 7],
        ["1456237", "2456137", "3456127", "6135427"]
    ),
    exc!(
        48,
        "7J",
        [1, 1, 2, 1, 1],
        [1, 2],
        ["3245167", "4235167", "5234167", "6234157", "7234156"]
    ),
    exc!(
        49,
        "8A",
        [1, 1, 1, 1, 1, 1, 1],
        [1, 2],
        ["35461278", "46527183", "56487213", "67341285", "74358216", "85347216"]
    ),
    exc!(
        50,
        "8A",
        [2, 1, 1, 1, 1, 1],
        [1, 2],
        ["34652718", "46752138", "56734128", "68214375", "78216453", "83412576"]
    ),
    exc!(
        51,
        "8B",
        [2, 1, 2, 1, 1],
        [2, 8],
        ["13245867", "32145867", "42156873", "52164873", "62145873", "73245861"]
    ),
];

/// Cycle exceptions: id, display name of the tournament shape, cycle blocks,
/// order, fixed arcs (0-based), freely oriented pairs. A record's members
/// are every orientation of the free pairs under which the cycle is absent.
pub(crate) struct CycRow {
    pub id: usize,
    pub name: &'static str,
    pub blocks: &'static [usize],
    pub order: usize,
    pub fixed: &'static [(usize, usize)],
    pub free: &'static [(usize, usize)],
}

const TRI: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

pub(crate) const CYCLE_EXCEPTIONS: &[CycRow] = &[
    CycRow {
        id: 1,
        name: "3A",
        blocks: &[2, 1],
        order: 3,
        fixed: &TRI,
        free: &[],
    },
    CycRow {
        id: 2,
        name: "5A",
        blocks: &[2, 1, 1, 1],
        order: 5,
        fixed: &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 0),
            (3, 4),
            (4, 0),
            (4, 1),
        ],
        free: &[],
    },
    CycRow {
        id: 3,
        name: "7A",
        blocks: &[2, 1, 1, 1, 1, 1],
        order: 7,
        fixed: &PALEY7,
        free: &[],
    },
    CycRow {
        id: 4,
        name: "4C",
        blocks: &[1, 1, 1, 1],
        order: 4,
        fixed: &TRI,
        free: &[(3, 0), (3, 1), (3, 2)],
    },
    CycRow {
        id: 5,
        name: "6M",
        blocks: &[1, 1, 1, 1, 1, 1],
        order: 6,
        fixed: &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 0),
            (3, 4),
            (4, 0),
            (4, 1),
        ],
        free: &[(5, 0), (5, 1), (5, 2), (5, 3), (5, 4)],
    },
    CycRow {
        id: 6,
        name: "8C",
        blocks: &[1, 1, 1, 1, 1, 1, 1, 1],
        order: 8,
        fixed: &PALEY7,
        free: &[(7, 0), (7, 1), (7, 2), (7, 3), (7, 4), (7, 5), (7, 6)],
    },
    CycRow {
        id: 7,
        name: "6N",
        blocks: &[4, 2],
        order: 6,
        fixed: &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (3, 0),
            (3, 1),
            (3, 2),
            (4, 0),
            (4, 1),
            (4, 2),
            (5, 0),
            (5, 1),
            (5, 2),
        ],
        free: &[],
    },
    CycRow {
        id: 8,
        name: "4B",
        blocks: &[2, 2],
        order: 4,
        fixed: &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)],
        free: &[],
    },
    CycRow {
        id: 9,
        name: "5C",
        blocks: &[4, 1],
        order: 5,
        fixed: &[
            (0, 1),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 0),
            (2, 3),
            (3, 4),
            (4, 0),
            (4, 1),
            (4, 2),
        ],
        free: &[],
    },
    CycRow {
        id: 10,
        name: "8D",
        blocks: &[1, 1, 1, 1, 1, 1, 1, 1],
        order: 8,
        fixed: &[
            (0, 1),
            (1, 2),
            (2, 0),
            (0, 7),
            (1, 7),
            (2, 7),
            (7, 3),
            (7, 4),
            (7, 5),
            (7, 6),
            (3, 0),
            (3, 1),
            (3, 2),
            (4, 0),
            (4, 1),
            (4, 2),
            (5, 0),
            (5, 1),
            (5, 2),
            (6, 0),
            (6, 1),
            (6, 2),
        ],
        free: &[(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
    },
    CycRow {
        id: 11,
        name: "6O",
        blocks: &[1, 1, 1, 1, 1, 1],
        order: 6,
        fixed: &[
            (5, 0),
            (5, 1),
            (5, 2),
            (0, 3),
            (1, 3),
            (2, 3),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
        free: &[(0, 1), (0, 2), (1, 2)],
    },
    CycRow {
        id: 12,
        name: "6P",
        blocks: &[1, 1, 1, 1, 1, 1],
        order: 6,
        fixed: &[
            (1, 0),
            (2, 0),
            (3, 0),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (0, 4),
            (0, 5),
            (2, 3),
            (4, 5),
            (5, 2),
            (5, 3),
        ],
        free: &[(2, 4), (3, 4)],
    },
    CycRow {
        id: 13,
        name: "6F",
        blocks: &[2, 1, 2, 1],
        order: 6,
        fixed: &[
            (0, 1),
            (0, 4),
            (1, 2),
            (1, 5),
            (2, 0),
            (2, 3),
            (3, 0),
            (3, 1),
            (3, 5),
            (4, 1),
            (4, 2),
            (4, 3),
            (5, 0),
            (5, 2),
            (5, 4),
        ],
        free: &[],
    },
    CycRow {
        id: 14,
        name: "6D",
        blocks: &[2, 2, 1, 1],
        order: 6,
        fixed: &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 0),
            (4, 1),
            (4, 5),
            (5, 0),
            (5, 1),
        ],
        free: &[],
    },
    CycRow {
        id: 15,
        name: "5A",
        blocks: &[1, 1, 1, 1],
        order: 5,
        fixed: &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 0),
            (3, 4),
            (4, 0),
            (4, 1),
        ],
        free: &[],
    },
    CycRow {
        id: 16,
        name: "5F",
        blocks: &[1, 1, 1, 1],
        order: 5,
        fixed: &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 0),
            (3, 1),
            (3, 2),
            (4, 3),
            (2, 4),
            (1, 4),
        ],
        free: &[(0, 4)],
    },
    CycRow {
        id: 17,
        name: "7K",
        blocks: &[1, 1, 1, 1, 1, 1],
        order: 7,
        fixed: &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 0),
            (4, 5),
            (4, 6),
            (5, 0),
            (5, 1),
            (5, 6),
            (6, 0),
            (6, 1),
            (6, 2),
        ],
        free: &[],
    },
    CycRow {
        id: 18,
        name: "7A",
        blocks: &[2, 1, 2, 1],
        order: 7,
        fixed: &PALEY7,
        free: &[],
    },
];

pub(crate) const PALEY7: [(usize, usize); 21] = [
    (0, 1),
    (0, 2),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 6),
    (3, 0),
    (3, 4),
    (3, 5),
    (4, 1),
    (4, 5),
    (4, 6),
    (5, 0),
    (5, 2),
    (5, 6),
    (6, 0),
    (6, 1),
    (6, 3),
];

/// Biexception list. Labels are 1-based labels of the base instance; `x` is
/// the added vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum BiexBase {
    Finite(usize),
    /// Family bases; `order` restricts the base order when set.
    Family(crate::catalog::FamilyId, Option<usize>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum BiexNbrs {
    Exact(&'static [usize]),
    /// Any subset of the instance's X part, of size at least two.
    WithinX,
    /// Exactly the instance's X part.
    AllOfX,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum BiexS {
    Labels(&'static [usize]),
    AllOfX,
    /// {3, u} where u is the dominant vertex of the two-vertex Y part.
    ThreeAndYDominant,
    /// {u} where u is the minimal vertex of the X part.
    XMinimal,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum BiexCond {
    None,
    YIsCyclicTriangle,
    YNotCyclicTriangleAndXSingleton,
    XIsTransitiveTriangle,
}

pub(crate) struct BiexRow {
    pub base: BiexBase,
    pub inpath: bool,
    pub nbrs: BiexNbrs,
    pub s: BiexS,
    pub cond: BiexCond,
}

macro_rules! bx {
    ($k:expr, $i:expr, $n:expr, $s:expr) => {
        BiexRow {
            base: BiexBase::Finite($k),
            inpath: $i == 1,
            nbrs: BiexNbrs::Exact(&$n),
            s: BiexS::Labels(&$s),
            cond: BiexCond::None,
        }
    };
}

use crate::catalog::FamilyId::*;

pub(crate) const BIEXCEPTIONS: &[BiexRow] = &[
    bx!(0, 0, [1, 2, 3], [1, 2, 3]),
    bx!(0, 0, [1, 2], [1, 2]),
    bx!(1, 0, [1, 3], [1, 2, 3]),
    bx!(1, 0, [2, 3], [1, 2]),
    bx!(1, 0, [1, 2, 3], [1, 2]),
    bx!(2, 0, [3, 4], [3]),
    bx!(4, 0, [1, 2], [5]),
    bx!(4, 0, [1, 2, 3], [1, 2]),
    bx!(6, 0, [4, 5], [4]),
    bx!(7, 0, [1, 2, 4], [1]),
    bx!(7, 0, [1, 4], [3]),
    bx!(9, 0, [2, 4, 5], [2]),
    bx!(9, 0, [4, 5], [2, 5]),
    bx!(15, 0, [1, 2, 6], [1]),
    bx!(15, 0, [1, 6], [3]),
    bx!(16, 0, [4, 5], [6]),
    bx!(16, 0, [4, 5, 6], [6]),
    bx!(26, 0, [4, 5, 6], [4, 5]),
    bx!(26, 0, [4, 6], [4, 5]),
    bx!(26, 0, [5, 6], [4, 5]),
    bx!(27, 0, [4, 6], [4]),
    bx!(31, 0, [3, 4], [4]),
    bx!(33, 0, [1, 2, 3, 5], [1]),
    bx!(33, 0, [1, 2, 4, 7], [7]),
    bx!(48, 0, [1, 2], [2]),
    bx!(0, 1, [1, 2], [1, 2]),
    bx!(1, 1, [1, 2], [1, 3]),
    bx!(1, 1, [1, 3], [1]),
    bx!(1, 1, [2, 3], [1, 2, 3, 4]),
    bx!(1, 1, [1, 2, 3], [1, 3]),
    bx!(2, 1, [3, 4], [4]),
    bx!(3, 1, [1, 2], [1, 4]),
    bx!(4, 1, [1, 2], [3]),
    bx!(4, 1, [1, 2, 3], [3]),
    bx!(4, 1, [1, 2, 4], [4]),
    bx!(5, 1, [1, 2, 3], [5]),
    bx!(6, 1, [4, 5], [4, 5]),
    bx!(7, 1, [1, 2, 3, 4], [4, 5]),
    bx!(7, 1, [1, 2, 3], [4, 5]),
    bx!(7, 1, [1, 2, 4], [1, 2]),
    bx!(8, 1, [2, 5], [1, 5]),
    bx!(9, 1, [2, 4, 5], [1, 2, 4]),
    bx!(9, 1, [2, 5], [1]),
    bx!(9, 1, [2, 4], [4]),
    bx!(9, 1, [4, 5], [4]),
    bx!(10, 1, [3, 5], [3, 4, 5]),
    bx!(11, 1, [1, 2], [1, 4]),
    bx!(12, 1, [1, 2], [1, 4]),
    bx!(15, 1, [1, 2, 3, 6], [6]),
    bx!(15, 1, [1, 2, 3], [6]),
    bx!(16, 1, [4, 5, 6], [4, 5]),
    bx!(16, 1, [4, 5], [4]),
    bx!(16, 1, [4, 6], [4, 5]),
    bx!(16, 1, [5, 6], [4, 5]),
    bx!(22, 1, [1, 2, 3], [1, 2, 3, 4, 5, 6]),
    bx!(24, 1, [1, 2, 3, 4], [4, 5]),
    bx!(26, 1, [4, 5, 6], [6]),
    bx!(26, 1, [4, 5], [6]),
    bx!(26, 1, [4, 6], [6]),
    bx!(32, 1, [5, 6], [4, 5]),
    bx!(33, 1, [1, 2, 5, 7], [2]),
    bx!(33, 1, [1, 2, 3, 6], [3]),
    // family bases
    BiexRow {
        base: BiexBase::Family(E1, None),
        inpath: false,
        nbrs: BiexNbrs::Exact(&[1, 2]),
        s: BiexS::Labels(&[1]),
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E3, None),
        inpath: false,
        nbrs: BiexNbrs::Exact(&[1, 3]),
        s: BiexS::Labels(&[1]),
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E5, None),
        inpath: false,
        nbrs: BiexNbrs::Exact(&[1, 2]),
        s: BiexS::Labels(&[1]),
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E8, None),
        inpath: false,
        nbrs: BiexNbrs::WithinX,
        s: BiexS::AllOfX,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E8Prime, None),
        inpath: false,
        nbrs: BiexNbrs::WithinX,
        s: BiexS::AllOfX,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E9, None),
        inpath: false,
        nbrs: BiexNbrs::WithinX,
        s: BiexS::AllOfX,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E9Prime, None),
        inpath: false,
        nbrs: BiexNbrs::WithinX,
        s: BiexS::AllOfX,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E10, None),
        inpath: false,
        nbrs: BiexNbrs::WithinX,
        s: BiexS::AllOfX,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E10Prime, None),
        inpath: false,
        nbrs: BiexNbrs::WithinX,
        s: BiexS::AllOfX,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E11, None),
        inpath: false,
        nbrs: BiexNbrs::Exact(&[1, 2]),
        s: BiexS::Labels(&[1]),
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E13, None),
        inpath: false,
        nbrs: BiexNbrs::Exact(&[1, 2]),
        s: BiexS::Labels(&[1]),
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E1, None),
        inpath: true,
        nbrs: BiexNbrs::Exact(&[1, 2, 3]),
        s: BiexS::AllOfX,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E2, Some(5)),
        inpath: true,
        nbrs: BiexNbrs::Exact(&[3, 4]),
        s: BiexS::Labels(&[5]),
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E5, Some(5)),
        inpath: true,
        nbrs: BiexNbrs::Exact(&[1, 2]),
        s: BiexS::Labels(&[1, 2]),
        cond: BiexCond::YIsCyclicTriangle,
    },
    BiexRow {
        base: BiexBase::Family(E5, None),
        inpath: true,
        nbrs: BiexNbrs::Exact(&[1, 2]),
        s: BiexS::Labels(&[2]),
        cond: BiexCond::YNotCyclicTriangleAndXSingleton,
    },
    BiexRow {
        base: BiexBase::Family(E6, Some(5)),
        inpath: true,
        nbrs: BiexNbrs::Exact(&[1, 3]),
        s: BiexS::ThreeAndYDominant,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E7, Some(6)),
        inpath: true,
        nbrs: BiexNbrs::Exact(&[2, 3]),
        s: BiexS::Labels(&[1]),
        cond: BiexCond::YIsCyclicTriangle,
    },
    BiexRow {
        base: BiexBase::Family(E8, Some(5)),
        inpath: true,
        nbrs: BiexNbrs::AllOfX,
        s: BiexS::AllOfX,
        cond: BiexCond::None,
    },
    BiexRow {
        base: BiexBase::Family(E8, Some(6)),
        inpath: true,
        nbrs: BiexNbrs::AllOfX,
        s: BiexS::XMinimal,
        cond: BiexCond::XIsTransitiveTriangle,
    },
];

/// Exception ids for which the origin sets in a tournament and its dual are
/// claimed disjoint (the two family entries are handled separately).
pub(crate) const DISJOINT_DUAL_ORIGIN_IDS: &[usize] = &[0, 1, 4, 7, 18, 19, 22, 33];
