//! Machine encodings of the named tournaments, path exceptions, exception
//! families, biexceptions, and cycle exceptions, plus matching utilities.

mod data;

pub(crate) use data::{BiexBase, BiexCond, BiexNbrs, BiexRow, BiexS};

use crate::error::{Error, Result};
use crate::pattern::{CycleType, PathType, Sign};
use crate::search::{self};
use crate::tournament::{CanonicalForm, Tournament, VertexSet};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

/// Looks up a named catalog tournament ("3A", "7K", ...).
/// Labels are shifted so printed label k sits at index k-1.
pub fn exception_tournament(name: &str) -> Result<Tournament> {
    for &(nm, n, bits) in data::NAMED {
        if nm == name {
            let v: Vec<bool> = bits.chars().map(|c| c == '1').collect();
            return Tournament::new(n, &v);
        }
    }
    Err(Error::UnknownTournament(name.to_string()))
}

pub fn tournament_names() -> Vec<&'static str> {
    data::NAMED.iter().map(|&(nm, _, _)| nm).collect()
}

/// One finite path exception: the pattern has no origin inside `non_origins`
/// and the listed witnesses realize it from every origin outside.
#[derive(Clone, Debug)]
pub struct ExceptionRecord {
    pub id: usize,
    pub tournament_name: &'static str,
    pub tournament: Tournament,
    pub path: PathType,
    /// 1-based labels.
    pub non_origins: Vec<usize>,
    /// 1-based label sequences.
    pub witnesses: Vec<Vec<usize>>,
}

impl ExceptionRecord {
    /// Non-origin set as 0-based indices.
    pub fn non_origin_set(&self) -> VertexSet {
        VertexSet::of(self.non_origins.iter().map(|&l| l - 1))
    }
}

/// All 52 finite path exceptions (one copy of the duplicated entry).
pub fn finite_path_exceptions() -> &'static [ExceptionRecord] {
    static CACHE: OnceLock<Vec<ExceptionRecord>> = OnceLock::new();
    CACHE.get_or_init(|| {
        data::FINITE_EXCEPTIONS
            .iter()
            .map(|row| ExceptionRecord {
                id: row.id,
                tournament_name: row.name,
                tournament: exception_tournament(row.name).expect("named"),
                path: PathType::outpath(row.blocks),
                non_origins: row.s.to_vec(),
                witnesses: row
                    .witnesses
                    .iter()
                    .map(|w| {
                        w.chars()
                            .map(|c| c.to_digit(10).unwrap() as usize)
                            .collect()
                    })
                    .collect(),
            })
            .collect()
    })
}

/// Exception ids whose origin sets in the tournament and its dual are listed
/// as disjoint.
pub fn disjoint_dual_origin_ids() -> &'static [usize] {
    data::DISJOINT_DUAL_ORIGIN_IDS
}

// ---------------------------------------------------------------- families

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FamilyId {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E7,
    E8,
    E8Prime,
    E9,
    E9Prime,
    E10,
    E10Prime,
    E11,
    E12,
    E13,
    E14,
}

pub const ALL_FAMILIES: [FamilyId; 17] = [
    FamilyId::E1,
    FamilyId::E2,
    FamilyId::E3,
    FamilyId::E4,
    FamilyId::E5,
    FamilyId::E6,
    FamilyId::E7,
    FamilyId::E8,
    FamilyId::E8Prime,
    FamilyId::E9,
    FamilyId::E9Prime,
    FamilyId::E10,
    FamilyId::E10Prime,
    FamilyId::E11,
    FamilyId::E12,
    FamilyId::E13,
    FamilyId::E14,
];

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::E1 => "E1",
            FamilyId::E2 => "E2",
            FamilyId::E3 => "E3",
            FamilyId::E4 => "E4",
            FamilyId::E5 => "E5",
            FamilyId::E6 => "E6",
            FamilyId::E7 => "E7",
            FamilyId::E8 => "E8",
            FamilyId::E8Prime => "E8'",
            FamilyId::E9 => "E9",
            FamilyId::E9Prime => "E9'",
            FamilyId::E10 => "E10",
            FamilyId::E10Prime => "E10'",
            FamilyId::E11 => "E11",
            FamilyId::E12 => "E12",
            FamilyId::E13 => "E13",
            FamilyId::E14 => "E14",
        }
    }

    pub fn parse(text: &str) -> Result<FamilyId> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(text))
            .ok_or_else(|| Error::UnknownFamily(text.to_string()))
    }

    /// Whether the family takes a second parameter tournament Y.
    pub fn takes_y(self) -> bool {
        matches!(self, FamilyId::E5 | FamilyId::E6 | FamilyId::E7)
    }

    /// Number of fixed vertices outside the parameter parts.
    fn fixed_count(self) -> usize {
        match self {
            FamilyId::E1 => 3,
            FamilyId::E2 => 4,
            FamilyId::E3 => 2,
            FamilyId::E4 => 3,
            FamilyId::E5 => 1,
            FamilyId::E6 => 2,
            FamilyId::E7 => 3,
            FamilyId::E8 | FamilyId::E8Prime => 3,
            FamilyId::E9 | FamilyId::E9Prime => 5,
            FamilyId::E10 | FamilyId::E10Prime => 7,
            FamilyId::E11 => 3,
            FamilyId::E12 => 4,
            FamilyId::E13 => 5,
            FamilyId::E14 => 6,
        }
    }

    /// Whether a fixed printed label is reserved for a distinguished X
    /// vertex (label 3 or 2), which the parameter's vertex 0 takes over.
    fn x_distinguished_label(self) -> Option<usize> {
        match self {
            FamilyId::E3 | FamilyId::E4 => Some(3),
            FamilyId::E5 | FamilyId::E6 => Some(2),
            _ => None,
        }
    }

    pub fn min_x(self) -> usize {
        match self {
            FamilyId::E1 | FamilyId::E2 => 1,
            FamilyId::E3 | FamilyId::E4 => 2,
            FamilyId::E5 | FamilyId::E6 => 1,
            FamilyId::E7 => 0,
            _ => 2,
        }
    }

    /// The pattern as a function of the instance order.
    pub fn path_type(self, order: usize) -> Result<PathType> {
        let n = order;
        let blocks: Vec<usize> = match self {
            FamilyId::E1 | FamilyId::E3 | FamilyId::E5 => vec![1, n - 2],
            FamilyId::E2 | FamilyId::E4 | FamilyId::E6 => vec![2, n - 3],
            FamilyId::E7 | FamilyId::E11 | FamilyId::E13 => vec![1, 1, n - 3],
            FamilyId::E8 => vec![n - 4, 1, 1, 1],
            FamilyId::E8Prime => vec![n - 4, 2, 1],
            FamilyId::E9 => vec![n - 6, 1, 1, 1, 1, 1],
            FamilyId::E9Prime => vec![n - 6, 2, 1, 1, 1],
            FamilyId::E10 => vec![n - 8, 1, 1, 1, 1, 1, 1, 1],
            FamilyId::E10Prime => vec![n - 8, 2, 1, 1, 1, 1, 1],
            FamilyId::E12 | FamilyId::E14 => vec![2, 1, n - 4],
        };
        if blocks.contains(&0) {
            return Err(Error::FamilyParams(format!(
                "{} has no instance of order {n}",
                self.name()
            )));
        }
        PathType::new(Sign::Out, blocks)
    }

    /// Non-origin labels (1-based); `x_labels` is the instance's X label set.
    fn non_origins(self, x_labels: &[usize]) -> Vec<usize> {
        match self {
            FamilyId::E1 => vec![1, 2, 3],
            FamilyId::E2 => vec![3, 4],
            FamilyId::E3 => vec![1, 3],
            FamilyId::E4 => vec![1, 4],
            FamilyId::E5 => vec![1, 2],
            FamilyId::E6 => vec![1, 3],
            FamilyId::E7 => vec![2, 3],
            FamilyId::E8
            | FamilyId::E8Prime
            | FamilyId::E9
            | FamilyId::E9Prime
            | FamilyId::E10
            | FamilyId::E10Prime => x_labels.to_vec(),
            FamilyId::E11 | FamilyId::E13 => vec![1, 2],
            FamilyId::E12 => vec![1, 4],
            FamilyId::E14 => vec![1, 6],
        }
    }
}

/// A concrete member of one of the infinite families.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub family: FamilyId,
    pub tournament: Tournament,
    pub path: PathType,
    /// 1-based labels of the instance.
    pub non_origins: Vec<usize>,
    pub x_labels: Vec<usize>,
    pub y_labels: Vec<usize>,
}

impl FamilyInstance {
    pub fn order(&self) -> usize {
        self.tournament.order()
    }

    pub fn non_origin_set(&self) -> VertexSet {
        VertexSet::of(self.non_origins.iter().map(|&l| l - 1))
    }
}

/// Whether `v` reaches every vertex of its tournament going backwards.
fn is_ingenerator(t: &Tournament, v: usize) -> bool {
    t.in_section(VertexSet::single(v)) == t.vertices()
}

/// Builds the family structure without checking side conditions.
/// `x`/`y` index 0 plays the distinguished role where one exists.
pub(crate) fn build_family_structure(
    id: FamilyId,
    x: Option<&Tournament>,
    y: Option<&Tournament>,
) -> Result<FamilyInstance> {
    use FamilyId::*;
    let xn = x.map_or(0, |t| t.order());
    let yn = y.map_or(0, |t| t.order());
    let fixed = id.fixed_count();
    let n = fixed + xn + yn;
    if n > crate::tournament::MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }

    // label layout: fixed printed labels first (with the distinguished X
    // label carved out), then fresh labels for the rest of X, then Y
    let dist = id.x_distinguished_label();
    let base = fixed + if dist.is_some() { 1 } else { 0 };
    let x_labels: Vec<usize> = match dist {
        Some(d) => std::iter::once(d)
            .chain((0..xn.saturating_sub(1)).map(|i| base + 1 + i))
            .collect(),
        None => (0..xn).map(|i| base + 1 + i).collect(),
    };
    if let Some(d) = dist {
        if xn == 0 {
            return Err(Error::FamilyParams(format!(
                "{} needs a nonempty X containing label {d}",
                id.name()
            )));
        }
    }
    let y_base = base + x_labels.len() - if dist.is_some() { 1 } else { 0 };
    let y_labels: Vec<usize> = (0..yn).map(|i| y_base + 1 + i).collect();

    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let dominate = |arcs: &mut Vec<(usize, usize)>, src: &[usize], dst: &[usize]| {
        for &a in src {
            for &b in dst {
                arcs.push((a, b));
            }
        }
    };
    // internal arcs of the parameter parts
    if let Some(xt) = x {
        for (a, b) in xt.arcs() {
            arcs.push((x_labels[a], x_labels[b]));
        }
    }
    if let Some(yt) = y {
        for (a, b) in yt.arcs() {
            arcs.push((y_labels[a], y_labels[b]));
        }
    }
    let xl = &x_labels;
    let yl = &y_labels;
    let not3 = |xl: &[usize]| -> Vec<usize> { xl.iter().copied().filter(|&v| v != 3).collect() };
    let not2 = |xl: &[usize]| -> Vec<usize> { xl.iter().copied().filter(|&v| v != 2).collect() };
    match id {
        E1 => {
            arcs.extend([(1, 2), (2, 3), (3, 1)]);
            dominate(&mut arcs, xl, &[1, 2, 3]);
        }
        E2 => {
            arcs.extend([(1, 2), (2, 3), (2, 4), (3, 1), (4, 1), (4, 3)]);
            dominate(&mut arcs, xl, &[1, 2, 3, 4]);
        }
        E3 => {
            arcs.extend([(2, 1), (1, 3)]);
            dominate(&mut arcs, &not3(xl), &[1]);
            dominate(&mut arcs, xl, &[2]);
        }
        E4 => {
            arcs.extend([(1, 4), (2, 1), (2, 4), (1, 3), (4, 3)]);
            dominate(&mut arcs, &not3(xl), &[1, 4]);
            dominate(&mut arcs, xl, &[2]);
        }
        E5 => {
            arcs.push((1, 2));
            dominate(&mut arcs, xl, yl);
            dominate(&mut arcs, &not2(xl), &[1]);
            dominate(&mut arcs, yl, &[1]);
        }
        E6 => {
            arcs.extend([(3, 1), (1, 2), (3, 2)]);
            dominate(&mut arcs, xl, yl);
            dominate(&mut arcs, &not2(xl), &[1, 3]);
            dominate(&mut arcs, yl, &[1, 3]);
        }
        E7 => {
            arcs.extend([(2, 1), (3, 1), (3, 2)]);
            dominate(&mut arcs, &[1], yl);
            dominate(&mut arcs, yl, &[2, 3]);
        }
        E8 | E8Prime => {
            arcs.extend([(1, 2), (2, 3), (3, 1)]);
            dominate(&mut arcs, &[1, 2, 3], xl);
        }
        E9 | E9Prime => {
            let five_a = exception_tournament("5A")?;
            for (a, b) in five_a.arcs() {
                arcs.push((a + 1, b + 1));
            }
            dominate(&mut arcs, &[1, 2, 3, 4, 5], xl);
        }
        E10 | E10Prime => {
            let seven_a = exception_tournament("7A")?;
            for (a, b) in seven_a.arcs() {
                arcs.push((a + 1, b + 1));
            }
            dominate(&mut arcs, &[1, 2, 3, 4, 5, 6, 7], xl);
        }
        E11 => {
            arcs.push((2, 3));
            dominate(&mut arcs, xl, &[1]);
            dominate(&mut arcs, &[1], &[2]);
            dominate(&mut arcs, xl, &[2]);
            dominate(&mut arcs, &[3], &[1]);
            dominate(&mut arcs, &[3], xl);
        }
        E12 => {
            arcs.extend([(4, 1), (2, 3)]);
            dominate(&mut arcs, xl, &[1, 4]);
            dominate(&mut arcs, &[3], &[1, 4]);
            dominate(&mut arcs, &[3], xl);
            dominate(&mut arcs, &[1, 4], &[2]);
            dominate(&mut arcs, xl, &[2]);
        }
        E13 => {
            arcs.extend([(3, 4), (4, 5), (5, 3)]);
            dominate(&mut arcs, xl, &[1]);
            dominate(&mut arcs, &[1], &[2]);
            dominate(&mut arcs, xl, &[2]);
            dominate(&mut arcs, &[2], &[3, 4, 5]);
            dominate(&mut arcs, &[3, 4, 5], &[1]);
            dominate(&mut arcs, &[3, 4, 5], xl);
        }
        E14 => {
            arcs.extend([(6, 1), (3, 4), (4, 5), (5, 3)]);
            dominate(&mut arcs, xl, &[1, 6]);
            dominate(&mut arcs, &[1, 6], &[2]);
            dominate(&mut arcs, xl, &[2]);
            dominate(&mut arcs, &[2], &[3, 4, 5]);
            dominate(&mut arcs, &[3, 4, 5], &[1, 6]);
            dominate(&mut arcs, &[3, 4, 5], xl);
        }
    }
    let zero_based: Vec<(usize, usize)> = arcs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    let t = Tournament::from_arcs(n, &zero_based)?;
    let path = id.path_type(n)?;
    Ok(FamilyInstance {
        family: id,
        non_origins: id.non_origins(&x_labels),
        x_labels,
        y_labels,
        tournament: t,
        path,
    })
}

/// Instantiates a family, enforcing its side conditions.
///
/// For families with a distinguished X vertex (the ingenerator), vertex 0 of
/// `x` plays that role.
pub fn instantiate_family(
    id: FamilyId,
    x: Option<&Tournament>,
    y: Option<&Tournament>,
) -> Result<FamilyInstance> {
    use FamilyId::*;
    let xn = x.map_or(0, |t| t.order());
    let yn = y.map_or(0, |t| t.order());
    if xn < id.min_x() {
        return Err(Error::FamilyParams(format!(
            "{} requires |X| >= {}",
            id.name(),
            id.min_x()
        )));
    }
    if id.takes_y() {
        let min_y = if id == E7 { 3 } else { 2 };
        if yn < min_y {
            return Err(Error::FamilyParams(format!(
                "{} requires |Y| >= {min_y}",
                id.name()
            )));
        }
    } else if yn != 0 {
        return Err(Error::FamilyParams(format!("{} takes no Y", id.name())));
    }
    match id {
        E3 | E4 => {
            let xt = x.unwrap();
            if xt.out_degree(0) == 0 {
                return Err(Error::FamilyParams(
                    "the distinguished X vertex needs an outneighbor inside X".into(),
                ));
            }
            if !is_ingenerator(xt, 0) {
                return Err(Error::FamilyParams(
                    "the distinguished X vertex must be an ingenerator of X".into(),
                ));
            }
        }
        E5 | E6 => {
            let xt = x.unwrap();
            if !is_ingenerator(xt, 0) {
                return Err(Error::FamilyParams(
                    "the distinguished X vertex must be an ingenerator of X".into(),
                ));
            }
        }
        E7 => {
            let yt = y.unwrap();
            if yt.order() == 3 && yt.is_strong() {
                return Err(Error::FamilyParams(
                    "Y must not be the cyclic triangle".into(),
                ));
            }
        }
        _ => {}
    }
    let inst = build_family_structure(id, x, y)?;
    if id == E5 && inst.order() < 5 {
        return Err(Error::FamilyParams("E5 requires order >= 5".into()));
    }
    Ok(inst)
}

/// Every family instance of order at most `max_order`, parameters ranged
/// over isomorphism-class representatives (with every choice of
/// distinguished vertex where one applies), deduplicated by the canonical
/// form of (tournament, pattern).
pub fn family_instances_up_to(max_order: usize) -> Vec<FamilyInstance> {
    let mut out: Vec<FamilyInstance> = Vec::new();
    let mut seen: std::collections::BTreeSet<(String, String)> = Default::default();
    for &id in &ALL_FAMILIES {
        for inst in family_instances_of(id, max_order) {
            let key = (
                inst.tournament.canonical_form().bit_string(),
                inst.path.to_string(),
            );
            if seen.insert(key) {
                out.push(inst);
            }
        }
    }
    out
}

/// All instances of one family with order at most `max_order`.
pub fn family_instances_of(id: FamilyId, max_order: usize) -> Vec<FamilyInstance> {
    family_fillings(id, max_order, false)
}

fn family_fillings(id: FamilyId, max_order: usize, shape_only: bool) -> Vec<FamilyInstance> {
    let fixed = id.fixed_count();
    let mut out = Vec::new();
    let max_param = max_order.saturating_sub(fixed);
    let xs_range: Vec<usize> = if id == FamilyId::E7 {
        vec![0]
    } else {
        (id.min_x()..=max_param).collect()
    };
    for &xs in &xs_range {
        let x_cands = param_candidates(xs, id.x_distinguished_label().is_some());
        let ys_range: Vec<usize> = if id.takes_y() {
            let min_y = if id == FamilyId::E7 { 3 } else { 2 };
            (min_y..=max_param.saturating_sub(xs)).collect()
        } else {
            vec![0]
        };
        for &ys in &ys_range {
            if fixed + xs + ys > max_order {
                continue;
            }
            let y_cands = param_candidates(ys, false);
            for xt in &x_cands {
                for yt in &y_cands {
                    let inst = if shape_only {
                        build_family_structure(id, xt.as_ref(), yt.as_ref())
                    } else {
                        instantiate_family(id, xt.as_ref(), yt.as_ref())
                    };
                    if let Ok(inst) = inst {
                        out.push(inst);
                    }
                }
            }
        }
    }
    out
}

/// Canonical forms of every tournament shape of the given order the catalog
/// describes: the named ones plus the family structures over all parameter
/// fillings, side conditions ignored (they restrict records, not shapes).
pub fn cataloged_shapes(order: usize) -> &'static BTreeSet<CanonicalForm> {
    static CACHE: OnceLock<[OnceLock<BTreeSet<CanonicalForm>>; 11]> = OnceLock::new();
    let slots = CACHE.get_or_init(Default::default);
    slots[order].get_or_init(|| {
        let mut set = BTreeSet::new();
        for name in tournament_names() {
            let t = exception_tournament(name).expect("named");
            if t.order() == order {
                set.insert(t.canonical_form());
            }
        }
        for &id in &ALL_FAMILIES {
            for inst in family_fillings(id, order, true) {
                if inst.order() == order {
                    set.insert(inst.tournament.canonical_form());
                }
            }
        }
        set
    })
}

/// Is the tournament isomorphic to one of the cataloged shapes?
pub fn is_cataloged_shape(t: &Tournament) -> bool {
    t.order() <= 10 && cataloged_shapes(t.order()).contains(&t.canonical_form())
}

/// Parameter tournaments of the given size: class representatives, and when
/// a distinguished vertex is required, every rotation of each class placing
/// a different vertex first.
fn param_candidates(size: usize, distinguished: bool) -> Vec<Option<Tournament>> {
    if size == 0 {
        return vec![None];
    }
    let reps = crate::enumerate::tournaments_of_order(size, true).expect("size <= cap");
    if !distinguished {
        return reps.into_iter().map(Some).collect();
    }
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for rep in &reps {
        for v in 0..size {
            // relabel so v becomes vertex 0
            let perm: Vec<usize> = std::iter::once(v)
                .chain((0..size).filter(|&u| u != v))
                .collect();
            let arcs: Vec<(usize, usize)> = rep
                .arcs()
                .iter()
                .map(|&(a, b)| {
                    let pa = perm.iter().position(|&u| u == a).unwrap();
                    let pb = perm.iter().position(|&u| u == b).unwrap();
                    (pa, pb)
                })
                .collect();
            let t = Tournament::from_arcs(size, &arcs).expect("relabel");
            let key = (t.canonical_form_rooted(0).bit_string(),);
            if seen.insert(key) {
                out.push(Some(t));
            }
        }
    }
    out
}

// ------------------------------------------------------------- biexceptions

/// One biexception: an extension of a base exception by a vertex `x` under
/// which not every other vertex starts the grown pattern while avoiding `x`
/// as the end.
#[derive(Clone, Debug)]
pub struct BiexceptionRecord {
    /// Finite base id, or family name.
    pub base: BiexceptionBase,
    /// Sign of the grown pattern: false for outpath, true for inpath.
    pub inpath: bool,
    pub row_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BiexceptionBase {
    Finite(usize),
    Family(FamilyId, Option<usize>),
}

/// A concrete biexception instance over 0-based vertices.
#[derive(Clone, Debug)]
pub struct BiexceptionInstance {
    pub record_index: usize,
    pub base_label: String,
    pub inpath: bool,
    /// The extended tournament; `x` is its last vertex.
    pub tournament: Tournament,
    pub x: usize,
    pub path: PathType,
    /// Stated non-origin-avoiding-x set, 0-based.
    pub stated_s: VertexSet,
}

pub(crate) fn biexception_rows() -> &'static [BiexRow] {
    data::BIEXCEPTIONS
}

/// All biexception records (one per listed entry).
pub fn biexception_records() -> Vec<BiexceptionRecord> {
    data::BIEXCEPTIONS
        .iter()
        .enumerate()
        .map(|(i, row)| BiexceptionRecord {
            base: match row.base {
                BiexBase::Finite(k) => BiexceptionBase::Finite(k),
                BiexBase::Family(f, o) => BiexceptionBase::Family(f, o),
            },
            inpath: row.inpath,
            row_index: i,
        })
        .collect()
}

/// Materializes the concrete instances of one biexception row, bases capped
/// at `max_base_order`.
pub fn biexception_instances(row_index: usize, max_base_order: usize) -> Vec<BiexceptionInstance> {
    let row = &data::BIEXCEPTIONS[row_index];
    let mut out = Vec::new();
    // collect (base tournament, base pattern, label string, X labels, Y labels)
    struct Base {
        t: Tournament,
        q: PathType,
        label: String,
        x_labels: Vec<usize>,
        y_labels: Vec<usize>,
        x_part: Option<Tournament>,
        y_part: Option<Tournament>,
    }
    let mut bases: Vec<Base> = Vec::new();
    match row.base {
        BiexBase::Finite(k) => {
            let rec = &finite_path_exceptions()[k];
            if rec.tournament.order() <= max_base_order {
                bases.push(Base {
                    t: rec.tournament.clone(),
                    q: rec.path.clone(),
                    label: format!("Exc {k}"),
                    x_labels: vec![],
                    y_labels: vec![],
                    x_part: None,
                    y_part: None,
                });
            }
        }
        BiexBase::Family(fid, fixed_order) => {
            let cap = fixed_order.unwrap_or(max_base_order).min(max_base_order);
            for inst in family_instances_raw(fid, cap, row.cond) {
                if let Some(fo) = fixed_order {
                    if inst.order() != fo {
                        continue;
                    }
                }
                let x_part = if inst.x_labels.is_empty() {
                    None
                } else {
                    inst.tournament
                        .induced(VertexSet::of(inst.x_labels.iter().map(|&l| l - 1)))
                        .ok()
                };
                let y_part = if inst.y_labels.is_empty() {
                    None
                } else {
                    inst.tournament
                        .induced(VertexSet::of(inst.y_labels.iter().map(|&l| l - 1)))
                        .ok()
                };
                bases.push(Base {
                    label: format!("{}({})", fid.name(), inst.order()),
                    q: inst.path.clone(),
                    x_labels: inst.x_labels.clone(),
                    y_labels: inst.y_labels.clone(),
                    t: inst.tournament.clone(),
                    x_part,
                    y_part,
                });
            }
        }
    }
    for base in &bases {
        let n0 = base.t.order();
        let sign = if row.inpath { Sign::In } else { Sign::Out };
        let path = base.q.grow_origin(sign);
        let x = n0;
        let nbr_sets: Vec<VertexSet> = match row.nbrs {
            BiexNbrs::Exact(labels) => {
                vec![VertexSet::of(labels.iter().map(|&l| l - 1))]
            }
            BiexNbrs::AllOfX => vec![VertexSet::of(base.x_labels.iter().map(|&l| l - 1))],
            BiexNbrs::WithinX => {
                let xset: Vec<usize> = base.x_labels.iter().map(|&l| l - 1).collect();
                let mut sets = Vec::new();
                for mask in 0u64..1 << xset.len() {
                    if mask.count_ones() < 2 {
                        continue;
                    }
                    let mut s = VertexSet::EMPTY;
                    for (i, &v) in xset.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            s.insert(v);
                        }
                    }
                    sets.push(s);
                }
                sets
            }
        };
        let stated_s = |base: &Base| -> VertexSet {
            match row.s {
                BiexS::Labels(labels) => VertexSet::of(labels.iter().map(|&l| l - 1)),
                BiexS::AllOfX => VertexSet::of(base.x_labels.iter().map(|&l| l - 1)),
                BiexS::ThreeAndYDominant => {
                    let yt = base.y_part.as_ref().expect("Y present");
                    debug_assert_eq!(yt.order(), 2);
                    let dom = if yt.has_arc(0, 1) { 0 } else { 1 };
                    let u = base.y_labels[dom] - 1;
                    VertexSet::of([2usize, u])
                }
                BiexS::XMinimal => {
                    let xt = base.x_part.as_ref().expect("X present");
                    let min = (0..xt.order())
                        .find(|&v| xt.in_degree(v) == 0)
                        .expect("a source");
                    VertexSet::single(base.x_labels[min] - 1)
                }
            }
        };
        for nbrs in nbr_sets {
            // i=0 grows by an out-vertex, i=1 by an in-vertex
            let out_mask = if row.inpath {
                base.t.vertices().minus(nbrs)
            } else {
                nbrs
            };
            let t = base.t.add_vertex(out_mask);
            let deg_ok = if row.inpath {
                t.in_degree(x) >= 2
            } else {
                t.out_degree(x) >= 2
            };
            if !deg_ok {
                continue;
            }
            out.push(BiexceptionInstance {
                record_index: row_index,
                base_label: base.label.clone(),
                inpath: row.inpath,
                x,
                path: path.clone(),
                stated_s: stated_s(base),
                tournament: t,
            });
        }
    }
    out
}

/// Family instances for biexception bases: like [`family_instances_of`] but
/// honoring the row's side condition (and bypassing the family's own Y
/// condition when the row demands a cyclic-triangle Y).
fn family_instances_raw(id: FamilyId, max_order: usize, cond: BiexCond) -> Vec<FamilyInstance> {
    let mut insts: Vec<FamilyInstance> = Vec::new();
    match cond {
        BiexCond::YIsCyclicTriangle if id == FamilyId::E7 => {
            // not a valid family instance on its own; build the structure
            let tri = exception_tournament("3A").expect("named");
            if 6 <= max_order {
                if let Ok(inst) = build_family_structure(id, None, Some(&tri)) {
                    insts.push(inst);
                }
            }
        }
        _ => {
            insts = family_instances_of(id, max_order);
        }
    }
    insts.retain(|inst| match cond {
        BiexCond::None => true,
        BiexCond::YIsCyclicTriangle => {
            inst.y_labels.len() == 3 && {
                let y = inst
                    .tournament
                    .induced(VertexSet::of(inst.y_labels.iter().map(|&l| l - 1)))
                    .unwrap();
                y.is_strong()
            }
        }
        BiexCond::YNotCyclicTriangleAndXSingleton => {
            inst.x_labels.len() == 1
                && !(inst.y_labels.len() == 3 && {
                    let y = inst
                        .tournament
                        .induced(VertexSet::of(inst.y_labels.iter().map(|&l| l - 1)))
                        .unwrap();
                    y.is_strong()
                })
        }
        BiexCond::XIsTransitiveTriangle => {
            inst.x_labels.len() == 3 && {
                let x = inst
                    .tournament
                    .induced(VertexSet::of(inst.x_labels.iter().map(|&l| l - 1)))
                    .unwrap();
                !x.is_strong()
            }
        }
    });
    insts
}

// --------------------------------------------------------- cycle exceptions

/// One cycle exception: a tournament shape (possibly with freely oriented
/// pairs) that does not contain the named cycle type.
#[derive(Clone, Debug)]
pub struct CycleExceptionRecord {
    pub id: usize,
    pub tournament_name: &'static str,
    pub cycle: CycleType,
    /// Canonical representatives of every orientation of the free pairs
    /// under which the cycle is absent.
    pub members: Vec<Tournament>,
    /// Total orientations of the free pairs, up to isomorphism.
    pub fill_classes: usize,
}

/// All cycle exception records.
pub fn cycle_exceptions() -> &'static [CycleExceptionRecord] {
    static CACHE: OnceLock<Vec<CycleExceptionRecord>> = OnceLock::new();
    CACHE.get_or_init(|| {
        data::CYCLE_EXCEPTIONS
            .iter()
            .map(|row| {
                let cycle = CycleType::new(row.blocks, true).expect("valid blocks");
                let mut fills: BTreeMap<CanonicalForm, Tournament> = BTreeMap::new();
                for mask in 0u64..1 << row.free.len() {
                    let mut arcs: Vec<(usize, usize)> = row.fixed.to_vec();
                    for (i, &(a, b)) in row.free.iter().enumerate() {
                        arcs.push(if mask >> i & 1 == 1 { (a, b) } else { (b, a) });
                    }
                    let t = Tournament::from_arcs(row.order, &arcs).expect("catalog arcs");
                    fills.entry(t.canonical_form()).or_insert(t);
                }
                let fill_classes = fills.len();
                let members: Vec<Tournament> = fills
                    .into_iter()
                    .filter(|(_, t)| !search::contains_cycle(t, &cycle))
                    .map(|(c, _)| c.to_tournament())
                    .collect();
                CycleExceptionRecord {
                    id: row.id,
                    tournament_name: row.name,
                    cycle,
                    members,
                    fill_classes,
                }
            })
            .collect()
    })
}

// ------------------------------------------------------------------ matching

/// What a pair matched in the catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchedException {
    Finite(usize),
    Family(FamilyId),
    Cycle(usize),
}

type PathIndex = BTreeMap<(String, String), MatchedException>;

fn path_index(order: usize) -> &'static PathIndex {
    static CACHE: OnceLock<[OnceLock<PathIndex>; 11]> = OnceLock::new();
    let slots = CACHE.get_or_init(Default::default);
    slots[order].get_or_init(|| {
        let mut map = BTreeMap::new();
        // family instances first so finite entries take precedence on overlap
        for inst in family_instances_up_to(order) {
            if inst.order() != order {
                continue;
            }
            map.insert(
                (
                    inst.tournament.canonical_form().bit_string(),
                    inst.path.to_string(),
                ),
                MatchedException::Family(inst.family),
            );
        }
        for rec in finite_path_exceptions() {
            if rec.tournament.order() != order {
                continue;
            }
            map.insert(
                (
                    rec.tournament.canonical_form().bit_string(),
                    rec.path.to_string(),
                ),
                MatchedException::Finite(rec.id),
            );
        }
        map
    })
}

/// Does (T, P) match a path exception record up to isomorphism?
///
/// The pattern must be Hamiltonian; family instances are materialized up to
/// order 10.
pub fn match_path_exception(t: &Tournament, p: &PathType) -> Option<MatchedException> {
    assert_eq!(t.order(), p.order(), "Hamiltonian pattern required");
    if t.order() > 10 {
        return None;
    }
    if p.sign != Sign::Out {
        return None;
    }
    let key = (t.canonical_form().bit_string(), p.to_string());
    path_index(t.order()).get(&key).cloned()
}

/// Does (T, C) match a cycle exception, directly or as the dual pair?
pub fn match_cycle_exception(t: &Tournament, c: &CycleType) -> Option<MatchedException> {
    let canon = t.canonical_form();
    let dual_canon = t.dual().canonical_form();
    let dual_c = c.dual();
    for rec in cycle_exceptions() {
        if rec.cycle == *c && rec.members.iter().any(|m| m.canonical_form() == canon) {
            return Some(MatchedException::Cycle(rec.id));
        }
        if rec.cycle == dual_c && rec.members.iter().any(|m| m.canonical_form() == dual_canon) {
            return Some(MatchedException::Cycle(rec.id));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_cycle_type;

    #[test]
    fn named_tournaments_resolve() {
        let c3 = exception_tournament("3A").unwrap();
        assert!(c3.is_strong());
        assert_eq!(c3.order(), 3);
        assert!(exception_tournament("9Z").is_err());
        assert_eq!(tournament_names().len(), data::NAMED.len());
    }

    #[test]
    fn five_a_is_two_regular() {
        let t = exception_tournament("5A").unwrap();
        for v in 0..5 {
            assert_eq!(t.out_degree(v), 2);
        }
    }

    #[test]
    fn seven_a_is_arc_transitive_doubly_regular() {
        let t = exception_tournament("7A").unwrap();
        for v in 0..7 {
            assert_eq!(t.out_degree(v), 3);
        }
        // every arc lies in exactly one common out-neighborhood pair count:
        // for a doubly regular tournament every dominated pair has exactly
        // one common dominator times... check |N+(u) cap N+(v)| = 1 for u->v
        for u in 0..7 {
            for v in 0..7 {
                if u != v && t.has_arc(u, v) {
                    let common = t.out_neighbors(u).intersect(t.out_neighbors(v));
                    assert_eq!(common.len(), 1);
                }
            }
        }
    }

    #[test]
    fn six_n_upper_triangle() {
        let t = exception_tournament("6N").unwrap();
        let upper = t.induced(VertexSet::of([0, 1, 2])).unwrap();
        assert!(upper.is_strong());
        assert!(upper.is_isomorphic(&exception_tournament("3A").unwrap()));
    }

    #[test]
    fn finite_exceptions_complete() {
        let recs = finite_path_exceptions();
        assert_eq!(recs.len(), 52);
        assert_eq!(recs[2].non_origins, vec![3, 4]);
        assert_eq!(recs[2].witnesses.len(), 2);
        assert_eq!(recs[0].witnesses.len(), 0);
        assert_eq!(recs[33].non_origins.len(), 7);
    }

    #[test]
    fn family_instantiation_small() {
        let single = Tournament::new(1, &[]).unwrap();
        let e1 = instantiate_family(FamilyId::E1, Some(&single), None).unwrap();
        assert_eq!(e1.order(), 4);
        assert_eq!(e1.path, PathType::outpath(&[1, 2]));
        assert_eq!(e1.non_origins, vec![1, 2, 3]);
        // arc from X into the triangle
        assert!(e1.tournament.has_arc(3, 0));

        let arc = Tournament::new(2, &[true]).unwrap();
        let e8 = instantiate_family(FamilyId::E8, Some(&arc), None).unwrap();
        assert_eq!(e8.path, PathType::outpath(&[1, 1, 1, 1]));

        let tri = exception_tournament("3A").unwrap();
        let e1_6 = instantiate_family(FamilyId::E1, Some(&tri), None).unwrap();
        assert_eq!(e1_6.order(), 6);
    }

    #[test]
    fn family_conditions_enforced() {
        let single = Tournament::new(1, &[]).unwrap();
        // E3 requires the distinguished vertex to have an outneighbor in X
        assert!(instantiate_family(FamilyId::E3, Some(&single), None).is_err());
        // E7 rejects the cyclic triangle as Y
        let tri = exception_tournament("3A").unwrap();
        assert!(instantiate_family(FamilyId::E7, None, Some(&tri)).is_err());
        let tt = Tournament::new(3, &[true, true, true]).unwrap();
        assert!(instantiate_family(FamilyId::E7, None, Some(&tt)).is_ok());
        // E5 needs |Y| >= 2
        assert!(instantiate_family(FamilyId::E5, Some(&single), Some(&single)).is_err());
    }

    #[test]
    fn cycle_records_have_expected_member_counts() {
        let recs = cycle_exceptions();
        assert_eq!(recs.len(), 18);
        let by_id = |id: usize| recs.iter().find(|r| r.id == id).unwrap();
        assert_eq!(by_id(1).members.len(), 1);
        assert_eq!(by_id(4).members.len(), 3);
        assert_eq!(by_id(5).members.len(), 7);
        assert_eq!(by_id(6).members.len(), 11);
        assert_eq!(by_id(10).members.len(), 4);
        assert_eq!(by_id(11).members.len(), 2);
        assert_eq!(by_id(12).members.len(), 4);
        assert_eq!(by_id(16).members.len(), 2);
        // fully pinned records keep their single member
        for id in [1, 2, 3, 7, 8, 9, 13, 14, 15, 17, 18] {
            assert_eq!(by_id(id).members.len(), 1, "A{id}");
        }
    }

    #[test]
    fn match_cycle_exception_up_to_relabeling_and_dual() {
        let c21 = parse_cycle_type("(2,1)").unwrap();
        let tri = exception_tournament("3A").unwrap();
        assert_eq!(
            match_cycle_exception(&tri, &c21),
            Some(MatchedException::Cycle(1))
        );
        let tt = Tournament::new(3, &[true, true, true]).unwrap();
        assert_eq!(match_cycle_exception(&tt, &c21), None);
        // A8 via the dual: the triangle-dominating-vertex shape
        let dual_4b = exception_tournament("4B").unwrap().dual();
        let c22 = parse_cycle_type("(2,2)").unwrap();
        assert_eq!(
            match_cycle_exception(&dual_4b, &c22),
            Some(MatchedException::Cycle(8))
        );
    }

    #[test]
    fn match_path_exception_finite_and_family() {
        let four_a = exception_tournament("4A").unwrap();
        let p = PathType::outpath(&[1, 2]);
        assert_eq!(
            match_path_exception(&four_a, &p),
            Some(MatchedException::Finite(2))
        );
        let tt = Tournament::new(3, &[true, true, true]).unwrap();
        assert_eq!(match_path_exception(&tt, &PathType::outpath(&[2])), None);
        // an E1 instance of order 5
        let arc = Tournament::new(2, &[true]).unwrap();
        let e1 = instantiate_family(FamilyId::E1, Some(&arc), None).unwrap();
        assert_eq!(
            match_path_exception(&e1.tournament, &e1.path),
            Some(MatchedException::Family(FamilyId::E1))
        );
    }
}

/// Debug helper: shape fillings of one family (side conditions ignored).
#[doc(hidden)]
pub fn family_shape_fillings_dbg(id: FamilyId, max_order: usize) -> Vec<FamilyInstance> {
    family_fillings(id, max_order, true)
}
