//! Oriented path and cycle types as signed block-length sequences.
//!
//! A path type is written `+(b1,...,bs)` or `-(b1,...,bs)`: the sign tells
//! whether the first arc leaves the origin, block `i` is a maximal directed
//! run, and consecutive blocks alternate direction. A cycle type `(b1,...,bs)`
//! reads its blocks the same way around the cycle, so either `s = 1`
//! (a directed cycle) or `s` is even.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Out,
    In,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Out => Sign::In,
            Sign::In => Sign::Out,
        }
    }
}

/// Type of an oriented path: sign plus block lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathType {
    pub sign: Sign,
    pub blocks: Vec<usize>,
}

impl PathType {
    pub fn new(sign: Sign, blocks: Vec<usize>) -> Result<PathType> {
        if blocks.is_empty() {
            return Err(Error::NoBlocks);
        }
        if blocks.contains(&0) {
            return Err(Error::ZeroBlock);
        }
        Ok(PathType { sign, blocks })
    }

    pub fn outpath(blocks: &[usize]) -> PathType {
        PathType::new(Sign::Out, blocks.to_vec()).expect("valid blocks")
    }

    pub fn inpath(blocks: &[usize]) -> PathType {
        PathType::new(Sign::In, blocks.to_vec()).expect("valid blocks")
    }

    /// Number of vertices: one more than the arc count.
    pub fn order(&self) -> usize {
        1 + self.blocks.iter().sum::<usize>()
    }

    pub fn is_directed(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn is_antidirected(&self) -> bool {
        self.blocks.iter().all(|&b| b == 1)
    }

    /// Arc directions along the path: `true` at position `i` iff the arc
    /// x_i -> x_{i+1} is forward.
    pub fn arc_dirs(&self) -> Vec<bool> {
        let mut dirs = Vec::with_capacity(self.order() - 1);
        let mut fwd = self.sign == Sign::Out;
        for &b in &self.blocks {
            for _ in 0..b {
                dirs.push(fwd);
            }
            fwd = !fwd;
        }
        dirs
    }

    fn from_arc_dirs(dirs: &[bool]) -> PathType {
        debug_assert!(!dirs.is_empty());
        let sign = if dirs[0] { Sign::Out } else { Sign::In };
        let mut blocks = Vec::new();
        let mut run = 1;
        for w in dirs.windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                blocks.push(run);
                run = 1;
            }
        }
        blocks.push(run);
        PathType { sign, blocks }
    }

    /// Same blocks, flipped sign: the type this path takes in the dual
    /// tournament.
    pub fn dual(&self) -> PathType {
        PathType {
            sign: self.sign.flip(),
            blocks: self.blocks.clone(),
        }
    }

    /// Type of the reversed traversal (reading the same path from its end).
    pub fn reverse(&self) -> PathType {
        let mut dirs = self.arc_dirs();
        dirs.reverse();
        for d in dirs.iter_mut() {
            *d = !*d;
        }
        PathType::from_arc_dirs(&dirs)
    }

    /// Type of the path with its origin removed, if anything remains.
    pub fn strip_origin(&self) -> Option<PathType> {
        let dirs = self.arc_dirs();
        if dirs.len() < 2 {
            return None;
        }
        Some(PathType::from_arc_dirs(&dirs[1..]))
    }

    /// The unique path type with the given sign whose origin-stripped rest
    /// equals `self`.
    pub fn grow_origin(&self, sign: Sign) -> PathType {
        let mut dirs = vec![sign == Sign::Out];
        dirs.extend(self.arc_dirs());
        PathType::from_arc_dirs(&dirs)
    }

    /// All path types of the given order (both signs): 2^(order-1) of them.
    pub fn enumerate(order: usize) -> Vec<PathType> {
        assert!(order >= 2, "paths need at least two vertices");
        let arcs = order - 1;
        let mut out = Vec::with_capacity(1 << arcs);
        for code in 0u64..1 << arcs {
            let dirs: Vec<bool> = (0..arcs).map(|k| code >> k & 1 == 1).collect();
            out.push(PathType::from_arc_dirs(&dirs));
        }
        out.sort();
        out
    }

    /// All outpath types of the given order: the sign-`+` half of
    /// [`enumerate`].
    ///
    /// [`enumerate`]: PathType::enumerate
    pub fn enumerate_outpaths(order: usize) -> Vec<PathType> {
        PathType::enumerate(order)
            .into_iter()
            .filter(|p| p.sign == Sign::Out)
            .collect()
    }
}

impl fmt::Display for PathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", if self.sign == Sign::Out { '+' } else { '-' })?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Type of an oriented cycle, stored in canonical rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    blocks: Vec<usize>,
}

impl CycleType {
    /// Canonicalizes a raw block list; `first_forward` tells whether the
    /// first listed block runs forward.
    pub fn new(blocks: &[usize], first_forward: bool) -> Result<CycleType> {
        if blocks.is_empty() {
            return Err(Error::NoBlocks);
        }
        if blocks.contains(&0) {
            return Err(Error::ZeroBlock);
        }
        if blocks.len() > 1 && !blocks.len().is_multiple_of(2) {
            return Err(Error::OddCycleBlocks);
        }
        let order: usize = blocks.iter().sum();
        if order < 3 {
            return Err(Error::CycleTooSmall(order));
        }
        if blocks.len() == 1 {
            return Ok(CycleType {
                blocks: blocks.to_vec(),
            });
        }
        let mut dirs = Vec::with_capacity(order);
        let mut fwd = first_forward;
        for &b in blocks {
            for _ in 0..b {
                dirs.push(fwd);
            }
            fwd = !fwd;
        }
        Ok(CycleType::from_arc_dirs(&dirs))
    }

    pub fn directed(order: usize) -> Result<CycleType> {
        if order < 3 {
            return Err(Error::CycleTooSmall(order));
        }
        Ok(CycleType {
            blocks: vec![order],
        })
    }

    /// Canonicalizes an orientation string around the cycle: bit `k` is the
    /// direction of the arc between positions k and k+1 (mod m). The
    /// canonical block sequence starts a forward block and is the
    /// lexicographically greatest one over all such rotations and over
    /// traversal reversal, putting the longest run first (the convention the
    /// catalog names follow, e.g. (2,1) for the non-directed triangle).
    pub fn from_arc_dirs(dirs: &[bool]) -> CycleType {
        let m = dirs.len();
        debug_assert!(m >= 3);
        if dirs.iter().all(|&d| d) || dirs.iter().all(|&d| !d) {
            return CycleType { blocks: vec![m] };
        }
        let mut best: Option<Vec<usize>> = None;
        let mut consider = |d: &[bool]| {
            for start in 0..m {
                // start of a forward block: forward here, backward before
                if !(d[start] && !d[(start + m - 1) % m]) {
                    continue;
                }
                let mut blocks = Vec::new();
                let mut run = 1;
                for k in 1..m {
                    let cur = d[(start + k) % m];
                    let prev = d[(start + k - 1) % m];
                    if cur == prev {
                        run += 1;
                    } else {
                        blocks.push(run);
                        run = 1;
                    }
                }
                blocks.push(run);
                if best.as_ref().is_none_or(|b| blocks > *b) {
                    best = Some(blocks);
                }
            }
        };
        consider(dirs);
        // reversed traversal: arc k of the reverse walk is arc m-1-k of the
        // original, flipped
        let rev: Vec<bool> = (0..m).map(|k| !dirs[m - 1 - k]).collect();
        consider(&rev);
        CycleType {
            blocks: best.expect("mixed orientation has a forward block start"),
        }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn is_directed(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn is_antidirected(&self) -> bool {
        self.blocks.len() > 1 && self.blocks.iter().all(|&b| b == 1)
    }

    /// Orientation bits in canonical rotation: position k holds the
    /// direction of the arc c_k c_{k+1 mod m}.
    pub fn arc_dirs(&self) -> Vec<bool> {
        let mut dirs = Vec::with_capacity(self.order());
        let mut fwd = true;
        for &b in &self.blocks {
            for _ in 0..b {
                dirs.push(fwd);
            }
            fwd = !fwd;
        }
        dirs
    }

    /// The type taken in the dual tournament: every arc reversed.
    pub fn dual(&self) -> CycleType {
        let dirs: Vec<bool> = self.arc_dirs().iter().map(|&d| !d).collect();
        CycleType::from_arc_dirs(&dirs)
    }

    /// All canonical non-directed cycle types of the given order; the
    /// directed type is appended when `include_directed` is set.
    pub fn enumerate(order: usize, include_directed: bool) -> Vec<CycleType> {
        assert!(order >= 3, "cycles need at least three vertices");
        let mut seen = std::collections::BTreeSet::new();
        for code in 1u64..(1 << order) - 1 {
            let dirs: Vec<bool> = (0..order).map(|k| code >> k & 1 == 1).collect();
            seen.insert(CycleType::from_arc_dirs(&dirs));
        }
        let mut out: Vec<CycleType> = seen.into_iter().collect();
        if include_directed {
            out.push(CycleType::directed(order).expect("order >= 3"));
            out.sort();
        }
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `+(a,b,...)` or `-(a,b,...)`.
pub fn parse_path_type(text: &str) -> Result<PathType> {
    let text = text.trim();
    let (sign, rest) = match text.chars().next() {
        Some('+') => (Sign::Out, &text[1..]),
        Some('-') => (Sign::In, &text[1..]),
        _ => return Err(Error::Parse("path type must start with + or -".into())),
    };
    PathType::new(sign, parse_block_list(rest)?)
}

/// Parses `(a,b,...)`, canonicalizing the rotation; the first block is read
/// as forward.
pub fn parse_cycle_type(text: &str) -> Result<CycleType> {
    CycleType::new(&parse_block_list(text.trim())?, true)
}

fn parse_block_list(text: &str) -> Result<Vec<usize>> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse("expected parenthesized block list".into()))?;
    let mut blocks = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(Error::Parse("empty block entry".into()));
        }
        let b: usize = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad block length {tok:?}")))?;
        blocks.push(b);
    }
    if blocks.is_empty() {
        return Err(Error::NoBlocks);
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path_types() {
        let p = parse_path_type("-(1,2)").unwrap();
        assert_eq!(p.sign, Sign::In);
        assert_eq!(p.blocks, vec![1, 2]);
        assert_eq!(p.order(), 4);
        assert!(parse_path_type("+(0)").is_err());
        assert!(parse_path_type("+()").is_err());
        assert!(parse_path_type("(1,2)").is_err());
        assert!(parse_path_type("+(1,x)").is_err());
    }

    #[test]
    fn parse_cycle_types() {
        let c = parse_cycle_type("(2,1)").unwrap();
        assert_eq!(c.blocks(), &[2, 1][..]);
        assert_eq!(c.order(), 3);
        assert!(parse_cycle_type("(1,1,1)").is_err());
        assert!(parse_cycle_type("(2)").is_err());
        assert!(parse_cycle_type("(1,1)").is_err());
        assert!(parse_cycle_type("(0,2)").is_err());
    }

    #[test]
    fn duals_and_reversal() {
        let anti = PathType::outpath(&[1, 1, 1]);
        assert_eq!(anti.dual(), PathType::inpath(&[1, 1, 1]));
        // reading x1 -> x2 -> x3 <- x4 from the far end starts with the
        // forward arc x4 -> x3
        assert_eq!(
            PathType::outpath(&[2, 1]).reverse(),
            PathType::outpath(&[1, 2])
        );
        assert_eq!(
            PathType::inpath(&[2, 1]).reverse(),
            PathType::inpath(&[1, 2])
        );
        for p in PathType::enumerate(8) {
            assert_eq!(p.dual().dual(), p);
            assert_eq!(p.reverse().reverse(), p);
            assert_eq!(p.dual().order(), p.order());
            assert_eq!(p.reverse().order(), p.order());
        }
    }

    #[test]
    fn strip_and_grow_origin() {
        let p = PathType::outpath(&[2, 1]);
        assert_eq!(p.strip_origin().unwrap(), PathType::outpath(&[1, 1]));
        assert_eq!(
            PathType::outpath(&[1, 1]).grow_origin(Sign::Out),
            PathType::outpath(&[2, 1])
        );
        assert_eq!(
            PathType::outpath(&[1, 1]).grow_origin(Sign::In),
            PathType::inpath(&[1, 1, 1])
        );
        assert!(PathType::outpath(&[1]).strip_origin().is_none());
        for p in PathType::enumerate(7) {
            assert_eq!(p.strip_origin().unwrap().grow_origin(p.sign), p);
        }
    }

    #[test]
    fn cycle_canonicalization_merges_rotations() {
        let a = CycleType::new(&[1, 2, 1, 2], true).unwrap();
        let b = CycleType::new(&[2, 1, 2, 1], true).unwrap();
        assert_eq!(a, b);
        assert_eq!(CycleType::new(&[2, 1], true).unwrap().blocks(), &[2, 1][..]);
    }

    #[test]
    fn cycle_canonicalization_merges_reversal() {
        // an orientation string and its reversed traversal
        let dirs = [true, true, false, true, true, false];
        let rev: Vec<bool> = (0..6).map(|k| !dirs[5 - k]).collect();
        assert_eq!(
            CycleType::from_arc_dirs(&dirs),
            CycleType::from_arc_dirs(&rev)
        );
    }

    // every orientation string, canonicalized, reproduces itself through
    // its own canonical arc_dirs
    #[test]
    fn cycle_arc_dirs_round_trip() {
        for m in 3..=8 {
            for code in 0u64..1 << m {
                let dirs: Vec<bool> = (0..m).map(|k| code >> k & 1 == 1).collect();
                let c = CycleType::from_arc_dirs(&dirs);
                assert_eq!(CycleType::from_arc_dirs(&c.arc_dirs()), c);
            }
        }
    }

    // oracle: orbit count of orientation strings with both directions
    // present, under rotation and traversal reversal
    #[test]
    fn enumerate_counts_match_orbit_oracle() {
        for m in 3..=8 {
            let mut orbits = std::collections::BTreeSet::new();
            for code in 1u64..(1 << m) - 1 {
                let dirs: Vec<bool> = (0..m).map(|k| code >> k & 1 == 1).collect();
                let mut repr: Option<Vec<bool>> = None;
                let mut feed = |d: &[bool]| {
                    for r in 0..m {
                        let rot: Vec<bool> = (0..m).map(|k| d[(k + r) % m]).collect();
                        if repr.as_ref().map_or(true, |x| rot < *x) {
                            repr = Some(rot);
                        }
                    }
                };
                feed(&dirs);
                let rev: Vec<bool> = (0..m).map(|k| !dirs[m - 1 - k]).collect();
                feed(&rev);
                orbits.insert(repr.unwrap());
            }
            let types = CycleType::enumerate(m, false);
            assert_eq!(types.len(), orbits.len(), "order {m}");
        }
        assert_eq!(CycleType::enumerate(3, false).len(), 1);
        assert_eq!(
            CycleType::enumerate(3, false)[0],
            CycleType::new(&[2, 1], true).unwrap()
        );
    }

    #[test]
    fn path_enumeration_counts() {
        for m in 2..=8 {
            assert_eq!(PathType::enumerate(m).len(), 1 << (m - 1));
            assert_eq!(PathType::enumerate_outpaths(m).len(), 1 << (m - 2).max(0));
        }
        let four: Vec<String> = PathType::enumerate(4)
            .iter()
            .map(|p| p.to_string())
            .collect();
        for want in [
            "+(3)", "+(2,1)", "+(1,2)", "+(1,1,1)", "-(3)", "-(2,1)", "-(1,2)", "-(1,1,1)",
        ] {
            assert!(four.contains(&want.to_string()), "{want} missing");
        }
    }

    #[test]
    fn display_round_trip() {
        for p in PathType::enumerate(6) {
            assert_eq!(parse_path_type(&p.to_string()).unwrap(), p);
        }
        for c in CycleType::enumerate(7, true) {
            assert_eq!(parse_cycle_type(&c.to_string()).unwrap(), c);
        }
    }
}
