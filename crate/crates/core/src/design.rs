//! Domain types for partial triple systems: points, pairs, triples, designs,
//! leave shapes and the Type-Q / Type-N classification.
//!
//! A partial triple system (PTS) on `v` points is a set of 3-element blocks in
//! which every pair of points appears at most once. The *leave* is the set of
//! pairs covered by no triple. A *maximum* partial triple system (MMPTS) has as
//! many triples as the order admits; its leave shape is forced by `v mod 6`.

use std::fmt;

use thiserror::Error;

/// A point of a design, an index in `[0, v)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointId(pub u8);

impl PointId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered pair of distinct points, stored with `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: PointId,
    hi: PointId,
}

impl Pair {
    /// Builds a pair from two distinct points, normalizing the order.
    ///
    /// Panics if `a == b`.
    pub fn new(a: PointId, b: PointId) -> Pair {
        assert!(a != b, "degenerate pair");
        if a < b {
            Pair { lo: a, hi: b }
        } else {
            Pair { lo: b, hi: a }
        }
    }

    pub fn of(a: u8, b: u8) -> Pair {
        Pair::new(PointId(a), PointId(b))
    }

    pub fn lo(self) -> PointId {
        self.lo
    }

    pub fn hi(self) -> PointId {
        self.hi
    }

    pub fn contains(self, p: PointId) -> bool {
        self.lo == p || self.hi == p
    }

    /// The endpoint other than `p`; panics if `p` is not an endpoint.
    pub fn other(self, p: PointId) -> PointId {
        if p == self.lo {
            self.hi
        } else {
            assert!(p == self.hi);
            self.lo
        }
    }

    /// Image under a point relabeling given as `map[old] = new`.
    pub fn relabel(self, map: &[u8]) -> Pair {
        Pair::of(map[self.lo.index()], map[self.hi.index()])
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            crate::codec::point_char(self.lo.0),
            crate::codec::point_char(self.hi.0)
        )
    }
}

/// An unordered triple of distinct points, stored with `a < b < c`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    a: PointId,
    b: PointId,
    c: PointId,
}

impl Triple {
    /// Builds a triple from three distinct points, normalizing the order.
    ///
    /// Panics if two of the points coincide.
    pub fn new(x: PointId, y: PointId, z: PointId) -> Triple {
        let mut t = [x, y, z];
        t.sort();
        assert!(t[0] != t[1] && t[1] != t[2], "degenerate triple");
        Triple {
            a: t[0],
            b: t[1],
            c: t[2],
        }
    }

    pub fn of(x: u8, y: u8, z: u8) -> Triple {
        Triple::new(PointId(x), PointId(y), PointId(z))
    }

    pub fn a(self) -> PointId {
        self.a
    }

    pub fn b(self) -> PointId {
        self.b
    }

    pub fn c(self) -> PointId {
        self.c
    }

    pub fn points(self) -> [PointId; 3] {
        [self.a, self.b, self.c]
    }

    pub fn pairs(self) -> [Pair; 3] {
        [
            Pair::new(self.a, self.b),
            Pair::new(self.a, self.c),
            Pair::new(self.b, self.c),
        ]
    }

    pub fn contains(self, p: PointId) -> bool {
        self.a == p || self.b == p || self.c == p
    }

    pub fn contains_pair(self, q: Pair) -> bool {
        self.contains(q.lo()) && self.contains(q.hi())
    }

    /// The point other than the two endpoints of `q`; panics unless `q ⊂ self`.
    pub fn third(self, q: Pair) -> PointId {
        for p in self.points() {
            if !q.contains(p) {
                return p;
            }
        }
        panic!("pair not contained in triple");
    }

    /// Image under a point relabeling given as `map[old] = new`.
    pub fn relabel(self, map: &[u8]) -> Triple {
        Triple::of(map[self.a.index()], map[self.b.index()], map[self.c.index()])
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            crate::codec::point_char(self.a.0),
            crate::codec::point_char(self.b.0),
            crate::codec::point_char(self.c.0)
        )
    }
}

/// The shape of an MMPTS leave, forced by `v mod 6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeaveShape {
    /// `v ≡ 1, 3 (mod 6)`: the system is a Steiner triple system.
    Empty,
    /// `v ≡ 5 (mod 6)`: four pairs forming a 4-cycle, listed in cycle order.
    FourCycle([PointId; 4]),
    /// `v ≡ 0, 2 (mod 6)`: `v/2` disjoint pairs.
    Matching,
    /// `v ≡ 4 (mod 6)`: three pairs through one center plus `(v-4)/2`
    /// disjoint pairs.
    TripodPlusMatching {
        center: PointId,
        arms: [PointId; 3],
    },
    /// All ten pairs on five points; only occurs in PBD intermediates.
    K5([PointId; 5]),
}

/// Shape without the witness points, for expectation checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeaveKind {
    Empty,
    FourCycle,
    Matching,
    TripodPlusMatching,
    K5,
}

impl LeaveShape {
    pub fn kind(&self) -> LeaveKind {
        match self {
            LeaveShape::Empty => LeaveKind::Empty,
            LeaveShape::FourCycle(_) => LeaveKind::FourCycle,
            LeaveShape::Matching => LeaveKind::Matching,
            LeaveShape::TripodPlusMatching { .. } => LeaveKind::TripodPlusMatching,
            LeaveShape::K5(_) => LeaveKind::K5,
        }
    }

    /// Recognises the shape of a pair set, or `None` if it is none of the
    /// shapes an MMPTS (or PBD intermediate) can have.
    pub fn classify(v: usize, leave: &[Pair]) -> Option<LeaveShape> {
        let mut deg = vec![0u8; v];
        for q in leave {
            deg[q.lo().index()] += 1;
            deg[q.hi().index()] += 1;
        }
        let mut by_deg = [0usize; 5];
        for &d in &deg {
            if d > 4 {
                return None;
            }
            by_deg[d as usize] += 1;
        }
        match leave.len() {
            0 => Some(LeaveShape::Empty),
            4 if by_deg[2] == 4 && by_deg[1] == 0 => {
                // Walk the 4-cycle starting from its least point.
                let a = leave.iter().map(|q| q.lo()).min().unwrap();
                let nbrs: Vec<PointId> = leave
                    .iter()
                    .filter(|q| q.contains(a))
                    .map(|q| q.other(a))
                    .collect();
                let (b, d) = (nbrs[0].min(nbrs[1]), nbrs[0].max(nbrs[1]));
                let c = leave
                    .iter()
                    .find(|q| q.contains(b) && !q.contains(a))?
                    .other(b);
                if c == d {
                    return None; // triangle plus an edge, not a 4-cycle
                }
                if leave.contains(&Pair::new(c, d)) {
                    Some(LeaveShape::FourCycle([a, b, c, d]))
                } else {
                    None
                }
            }
            10 if by_deg[4] == 5 => {
                let mut pts: Vec<PointId> = deg
                    .iter()
                    .enumerate()
                    .filter(|&(_, &d)| d == 4)
                    .map(|(i, _)| PointId(i as u8))
                    .collect();
                pts.sort();
                Some(LeaveShape::K5([pts[0], pts[1], pts[2], pts[3], pts[4]]))
            }
            n if n == v / 2 && v % 2 == 0 && by_deg[1] == v => Some(LeaveShape::Matching),
            n if v >= 4 && n == (v + 2) / 2 && by_deg[3] == 1 && by_deg[1] == v - 1 => {
                let center = PointId(deg.iter().position(|&d| d == 3)? as u8);
                let mut arms: Vec<PointId> = leave
                    .iter()
                    .filter(|q| q.contains(center))
                    .map(|q| q.other(center))
                    .collect();
                if arms.iter().any(|a| deg[a.index()] != 1) {
                    return None;
                }
                arms.sort();
                Some(LeaveShape::TripodPlusMatching {
                    center,
                    arms: [arms[0], arms[1], arms[2]],
                })
            }
            _ => None,
        }
    }
}

/// Number of leave pairs of an MMPTS(v).
pub fn leave_size(v: usize) -> usize {
    match v % 6 {
        1 | 3 => 0,
        0 | 2 => v / 2,
        4 => (v + 2) / 2,
        5 => 4,
        _ => unreachable!(),
    }
}

/// Leave kind and triple count of an MMPTS(v): the block count is
/// `(v(v-1)/2 - leave_size(v)) / 3`.
pub fn expected_leave_and_blocks(v: usize) -> (LeaveKind, usize) {
    assert!(v >= 3);
    let kind = match v % 6 {
        1 | 3 => LeaveKind::Empty,
        0 | 2 => LeaveKind::Matching,
        4 => LeaveKind::TripodPlusMatching,
        5 => LeaveKind::FourCycle,
        _ => unreachable!(),
    };
    let pairs = v * (v - 1) / 2;
    debug_assert_eq!((pairs - leave_size(v)) % 3, 0);
    (kind, (pairs - leave_size(v)) / 3)
}

/// Whether an STS(v) exists.
pub fn admissible(v: usize) -> bool {
    v % 6 == 1 || v % 6 == 3
}

#[derive(Debug, Error)]
pub enum DesignError {
    #[error("order {0} is too small (need v >= 3)")]
    OrderTooSmall(usize),
    #[error("point {point:?} out of range for order {v}")]
    PointOutOfRange { v: usize, point: PointId },
    #[error("order {0} exceeds the supported maximum of {max}", max = MAX_ORDER)]
    OrderTooLarge(usize),
}

/// Largest order the in-memory representations support. Everything in scope
/// lives at v <= 17; the cap leaves headroom for one-point extensions.
pub const MAX_ORDER: usize = 31;

/// A partial triple system: an order, a sorted triple list, and the derived
/// leave (the pairs covered by no triple).
///
/// Construction does not reject triple sets that cover a pair twice — those
/// are diagnosed by [`validate`] — but point ranges are always enforced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Design {
    v: usize,
    triples: Vec<Triple>,
    leave: Vec<Pair>,
}

impl Design {
    pub fn new(v: usize, mut triples: Vec<Triple>) -> Result<Design, DesignError> {
        if v < 3 {
            return Err(DesignError::OrderTooSmall(v));
        }
        if v > MAX_ORDER {
            return Err(DesignError::OrderTooLarge(v));
        }
        for t in &triples {
            for p in t.points() {
                if p.index() >= v {
                    return Err(DesignError::PointOutOfRange { v, point: p });
                }
            }
        }
        triples.sort();
        let mut covered = vec![false; v * v];
        for t in &triples {
            for q in t.pairs() {
                covered[q.lo().index() * v + q.hi().index()] = true;
            }
        }
        let mut leave = Vec::with_capacity(leave_size(v));
        for lo in 0..v {
            for hi in lo + 1..v {
                if !covered[lo * v + hi] {
                    leave.push(Pair::of(lo as u8, hi as u8));
                }
            }
        }
        Ok(Design { v, triples, leave })
    }

    pub fn from_arrays(v: usize, triples: &[[u8; 3]]) -> Result<Design, DesignError> {
        Design::new(
            v,
            triples.iter().map(|t| Triple::of(t[0], t[1], t[2])).collect(),
        )
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn leave(&self) -> &[Pair] {
        &self.leave
    }

    pub fn leave_shape(&self) -> Option<LeaveShape> {
        LeaveShape::classify(self.v, &self.leave)
    }

    /// The pair-to-covering-triple table.
    pub fn cover_map(&self) -> PairMap {
        PairMap::new(self)
    }

    /// Relabels every point by `map[old] = new`; `map` must be a permutation
    /// of `[0, v)`.
    pub fn relabel(&self, map: &[u8]) -> Design {
        debug_assert_eq!(map.len(), self.v);
        let triples = self.triples.iter().map(|t| t.relabel(map)).collect();
        Design::new(self.v, triples).expect("relabeling preserves validity")
    }
}

impl fmt::Debug for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Design(v={}, triples=[", self.v)?;
        for (i, t) in self.triples.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t:?}")?;
        }
        write!(f, "])")
    }
}

/// Maps each pair to the index (into `design.triples()`) of its covering
/// triple, if any. When a pair is covered more than once the last triple wins;
/// [`validate`] reports such designs as invalid.
pub struct PairMap {
    v: usize,
    table: Vec<u16>,
}

const NO_TRIPLE: u16 = u16::MAX;

impl PairMap {
    fn new(design: &Design) -> PairMap {
        let v = design.v;
        let mut table = vec![NO_TRIPLE; v * v];
        for (i, t) in design.triples.iter().enumerate() {
            for q in t.pairs() {
                table[q.lo().index() * v + q.hi().index()] = i as u16;
                table[q.hi().index() * v + q.lo().index()] = i as u16;
            }
        }
        PairMap { v, table }
    }

    pub fn covering(&self, a: PointId, b: PointId) -> Option<u16> {
        let i = self.table[a.index() * self.v + b.index()];
        (i != NO_TRIPLE).then_some(i)
    }
}

/// What a design is claimed to be; stronger claims check more.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Pts,
    Mmpts,
    Sts,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    /// Two triples share a pair.
    DuplicatePair { pair: Pair, first: Triple, second: Triple },
    WrongBlockCount { expected: usize, actual: usize },
    WrongLeaveShape { expected: LeaveKind },
    /// STS claimed at an order with no STS.
    InadmissibleOrder { v: usize },
}

#[derive(Debug)]
pub struct ValidationReport {
    pub claim: Claim,
    pub leave_shape: Option<LeaveShape>,
    pub errors: Vec<ValidationError>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Checks a design against a claim.
///
/// Every claim requires pairwise pair-disjoint triples. `Mmpts` additionally
/// requires the exact block count and the leave shape of the residue class;
/// `Sts` requires an admissible order and an empty leave.
pub fn validate(design: &Design, claim: Claim) -> ValidationReport {
    let v = design.v;
    let mut errors = Vec::new();

    let mut first_cover = vec![NO_TRIPLE; v * v];
    for (i, t) in design.triples.iter().enumerate() {
        for q in t.pairs() {
            let slot = &mut first_cover[q.lo().index() * v + q.hi().index()];
            if *slot != NO_TRIPLE {
                errors.push(ValidationError::DuplicatePair {
                    pair: q,
                    first: design.triples[*slot as usize],
                    second: *t,
                });
            } else {
                *slot = i as u16;
            }
        }
    }

    let leave_shape = design.leave_shape();
    match claim {
        Claim::Pts => {}
        Claim::Mmpts => {
            let (kind, blocks) = expected_leave_and_blocks(v);
            if design.triples.len() != blocks {
                errors.push(ValidationError::WrongBlockCount {
                    expected: blocks,
                    actual: design.triples.len(),
                });
            }
            if leave_shape.as_ref().map(|s| s.kind()) != Some(kind) {
                errors.push(ValidationError::WrongLeaveShape { expected: kind });
            }
        }
        Claim::Sts => {
            if !admissible(v) {
                errors.push(ValidationError::InadmissibleOrder { v });
            } else if !design.leave.is_empty() {
                errors.push(ValidationError::WrongLeaveShape {
                    expected: LeaveKind::Empty,
                });
            }
        }
    }

    ValidationReport {
        claim,
        leave_shape,
        errors,
    }
}

/// Quintuple-case classification of an MMPTS at `v ≡ 4, 5 (mod 6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SystemType {
    TypeQ,
    TypeN,
    /// Orders with `v ≢ 4, 5 (mod 6)` have no classification.
    NotApplicable,
}

impl SystemType {
    pub fn tag(self) -> char {
        match self {
            SystemType::TypeQ => 'Q',
            SystemType::TypeN => 'N',
            SystemType::NotApplicable => '-',
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("leave does not have the shape required at this order")]
    WrongLeaveShape,
}

/// Classifies a valid MMPTS as Type-Q or Type-N.
///
/// For `v ≡ 5 (mod 6)` with leave 4-cycle `(a,b,c,d)`: the diagonals `{a,c}`
/// and `{b,d}` are each covered by exactly one triple; the design is Type-Q
/// when those triples share their third point. For `v ≡ 4 (mod 6)` the type is
/// inherited through one-point extension: Type-Q when any of the three
/// extension choices yields a Type-Q system (the three choices have never been
/// observed to disagree, but the definition quantifies existentially).
pub fn classify_type(design: &Design) -> Result<SystemType, ClassifyError> {
    match design.v % 6 {
        5 => {
            let Some(LeaveShape::FourCycle([a, b, c, d])) = design.leave_shape() else {
                return Err(ClassifyError::WrongLeaveShape);
            };
            let map = design.cover_map();
            let t1 = map.covering(a, c).ok_or(ClassifyError::WrongLeaveShape)?;
            let t2 = map.covering(b, d).ok_or(ClassifyError::WrongLeaveShape)?;
            let e1 = design.triples[t1 as usize].third(Pair::new(a, c));
            let e2 = design.triples[t2 as usize].third(Pair::new(b, d));
            Ok(if e1 == e2 {
                SystemType::TypeQ
            } else {
                SystemType::TypeN
            })
        }
        4 => {
            let choices = crate::transform::extension_choices(design)
                .map_err(|_| ClassifyError::WrongLeaveShape)?;
            for choice in choices {
                let extended = crate::transform::extend_point(design, choice)
                    .map_err(|_| ClassifyError::WrongLeaveShape)?;
                if classify_type(&extended)? == SystemType::TypeQ {
                    return Ok(SystemType::TypeQ);
                }
            }
            Ok(SystemType::TypeN)
        }
        _ => Ok(SystemType::NotApplicable),
    }
}

/// A pairwise balanced design PBD(v,{3,5*}): triples plus exactly one block
/// of size five, together covering every pair exactly once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pbd35 {
    v: usize,
    triples: Vec<Triple>,
    quintuple: [PointId; 5],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PbdError {
    #[error("point out of range")]
    PointOutOfRange,
    #[error("quintuple block has repeated points")]
    DegenerateQuintuple,
    #[error("pair {0:?} covered more than once")]
    DuplicatePair(Pair),
    #[error("pair {0:?} not covered")]
    UncoveredPair(Pair),
}

impl Pbd35 {
    pub fn new(
        v: usize,
        mut triples: Vec<Triple>,
        mut quintuple: [PointId; 5],
    ) -> Result<Pbd35, PbdError> {
        quintuple.sort();
        if quintuple.windows(2).any(|w| w[0] == w[1]) {
            return Err(PbdError::DegenerateQuintuple);
        }
        if quintuple[4].index() >= v
            || triples
                .iter()
                .any(|t| t.points().iter().any(|p| p.index() >= v))
        {
            return Err(PbdError::PointOutOfRange);
        }
        triples.sort();
        let mut count = vec![0u8; v * v];
        let mut bump = |q: Pair| {
            count[q.lo().index() * v + q.hi().index()] += 1;
        };
        for t in &triples {
            for q in t.pairs() {
                bump(q);
            }
        }
        for i in 0..5 {
            for j in i + 1..5 {
                bump(Pair::new(quintuple[i], quintuple[j]));
            }
        }
        for lo in 0..v {
            for hi in lo + 1..v {
                let q = Pair::of(lo as u8, hi as u8);
                match count[lo * v + hi] {
                    0 => return Err(PbdError::UncoveredPair(q)),
                    1 => {}
                    _ => return Err(PbdError::DuplicatePair(q)),
                }
            }
        }
        Ok(Pbd35 {
            v,
            triples,
            quintuple,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn quintuple(&self) -> [PointId; 5] {
        self.quintuple
    }

    pub fn relabel(&self, map: &[u8]) -> Pbd35 {
        let triples = self.triples.iter().map(|t| t.relabel(map)).collect();
        let q = self.quintuple.map(|p| PointId(map[p.index()]));
        Pbd35::new(self.v, triples, q).expect("relabeling preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;

    #[test]
    fn leave_and_block_counts() {
        assert_eq!(expected_leave_and_blocks(17), (LeaveKind::FourCycle, 44));
        assert_eq!(
            expected_leave_and_blocks(16),
            (LeaveKind::TripodPlusMatching, 37)
        );
        assert_eq!(expected_leave_and_blocks(14), (LeaveKind::Matching, 28));
        assert_eq!(expected_leave_and_blocks(12), (LeaveKind::Matching, 20));
        assert_eq!(expected_leave_and_blocks(7), (LeaveKind::Empty, 7));
        assert_eq!(expected_leave_and_blocks(9), (LeaveKind::Empty, 12));
        assert_eq!(expected_leave_and_blocks(15), (LeaveKind::Empty, 35));
        assert_eq!(expected_leave_and_blocks(5), (LeaveKind::FourCycle, 2));
        assert_eq!(expected_leave_and_blocks(4), (LeaveKind::TripodPlusMatching, 1));
    }

    #[test]
    fn leave_identity_holds() {
        // 3|triples| + |leave| = v(v-1)/2 for pair-disjoint triple sets.
        for d in [known::mmpts11_type_q(), known::mmpts11_type_n()] {
            assert_eq!(
                3 * d.triples().len() + d.leave().len(),
                d.v() * (d.v() - 1) / 2
            );
        }
    }

    #[test]
    fn order11_q_is_valid_mmpts_with_4cycle_leave() {
        let q = known::mmpts11_type_q();
        let report = validate(&q, Claim::Mmpts);
        assert!(report.is_valid(), "{:?}", report.errors);
        assert_eq!(
            report.leave_shape,
            Some(LeaveShape::FourCycle([
                PointId(0),
                PointId(1),
                PointId(2),
                PointId(3)
            ]))
        );
    }

    #[test]
    fn empty_design_is_a_valid_pts() {
        let d = Design::new(3, vec![]).unwrap();
        let report = validate(&d, Claim::Pts);
        assert!(report.is_valid());
        assert_eq!(d.leave().len(), 3);
    }

    #[test]
    fn corrupted_q_reports_duplicate_pair() {
        // Replace triple 024 by 025: pair 05 is then in both 025 and 056.
        let mut triples: Vec<Triple> = known::mmpts11_type_q().triples().to_vec();
        let pos = triples.iter().position(|t| *t == Triple::of(0, 2, 4)).unwrap();
        triples[pos] = Triple::of(0, 2, 5);
        let d = Design::new(11, triples).unwrap();
        let report = validate(&d, Claim::Mmpts);
        assert!(report
            .errors
            .iter()
            .any(|e| matches!(e, ValidationError::DuplicatePair { pair, .. } if *pair == Pair::of(0, 5))));
    }

    #[test]
    fn sts_claim_rejects_inadmissible_order() {
        let d = Design::new(11, vec![]).unwrap();
        let report = validate(&d, Claim::Sts);
        assert!(report
            .errors
            .iter()
            .any(|e| matches!(e, ValidationError::InadmissibleOrder { v: 11 })));
    }

    #[test]
    fn table1_types() {
        assert_eq!(
            classify_type(&known::mmpts11_type_q()),
            Ok(SystemType::TypeQ)
        );
        assert_eq!(
            classify_type(&known::mmpts11_type_n()),
            Ok(SystemType::TypeN)
        );
    }

    #[test]
    fn sts_classification_not_applicable() {
        assert_eq!(
            classify_type(&known::sts7()),
            Ok(SystemType::NotApplicable)
        );
    }

    #[test]
    fn point_degrees_match_leave_degrees() {
        let q = known::mmpts11_type_q();
        for x in 0..11u8 {
            let p = PointId(x);
            let triple_deg = q.triples().iter().filter(|t| t.contains(p)).count();
            let leave_deg = q.leave().iter().filter(|q| q.contains(p)).count();
            assert_eq!(triple_deg, (11 - 1 - leave_deg) / 2);
        }
    }

    #[test]
    fn diagonals_covered_exactly_once() {
        for d in [known::mmpts11_type_q(), known::mmpts11_type_n()] {
            let Some(LeaveShape::FourCycle([a, b, c, dd])) = d.leave_shape() else {
                panic!("expected 4-cycle leave");
            };
            for diag in [Pair::new(a, c), Pair::new(b, dd)] {
                let n = d.triples().iter().filter(|t| t.contains_pair(diag)).count();
                assert_eq!(n, 1);
            }
        }
    }

    #[test]
    fn shape_classifier_rejects_triangle_plus_edge() {
        // {01,12,02,34} has the right size/degrees for a 4-cycle at v=5 only
        // if it closes; a triangle plus a disjoint edge must not classify.
        let leave = vec![Pair::of(0, 1), Pair::of(1, 2), Pair::of(0, 2), Pair::of(3, 4)];
        assert_eq!(LeaveShape::classify(5, &leave), None);
    }
}
