//! Exact integer primitives for counting crossings in tripartite-circle
//! drawings.
//!
//! A drawing of K_{m,n,p} with each part on its own circle is described, up
//! to the data that determines its crossing count, by families of integer
//! labels: an x-label on circle B for every vertex of A records where the
//! star from that vertex leaves room for circle A, and a y-label records
//! where it leaves room for the third circle. All counts reduce to the
//! chord-count function `f` of the cyclic distance between two labels.
//!
//! Everything here is a pure function on exact integers; label values are
//! 1-based and only differences mod the circle size are ever observed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the three circles of a tripartite-circle drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Circle {
    M,
    N,
    P,
}

impl Circle {
    pub const ALL: [Circle; 3] = [Circle::M, Circle::N, Circle::P];

    /// Successor in the fixed cyclic order M -> N -> P -> M.
    pub fn next(self) -> Circle {
        match self {
            Circle::M => Circle::N,
            Circle::N => Circle::P,
            Circle::P => Circle::M,
        }
    }

    /// Predecessor in the cyclic order.
    pub fn prev(self) -> Circle {
        self.next().next()
    }

    /// The three cyclic pairs (A, next(A)), in the order (M,N), (N,P), (P,M).
    pub fn cyclic_pairs() -> [(Circle, Circle); 3] {
        [
            (Circle::M, Circle::N),
            (Circle::N, Circle::P),
            (Circle::P, Circle::M),
        ]
    }

    /// The three cyclic triples (A, B, C), in the order
    /// (M,N,P), (N,P,M), (P,M,N).
    pub fn cyclic_triples() -> [(Circle, Circle, Circle); 3] {
        [
            (Circle::M, Circle::N, Circle::P),
            (Circle::N, Circle::P, Circle::M),
            (Circle::P, Circle::M, Circle::N),
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Circle::M => "M",
            Circle::N => "N",
            Circle::P => "P",
        }
    }
}

/// Vertex counts of the three circles of K_{m,n,p}; all positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr")]
pub struct TripartiteSpec {
    m: u32,
    n: u32,
    p: u32,
}

#[derive(Deserialize)]
struct SpecRepr {
    m: u32,
    n: u32,
    p: u32,
}

impl TryFrom<SpecRepr> for TripartiteSpec {
    type Error = Error;

    fn try_from(r: SpecRepr) -> Result<Self> {
        TripartiteSpec::new(r.m, r.n, r.p)
    }
}

impl TripartiteSpec {
    pub fn new(m: u32, n: u32, p: u32) -> Result<Self> {
        if m == 0 || n == 0 || p == 0 {
            return Err(Error::InvalidSpec(m, n, p));
        }
        Ok(TripartiteSpec { m, n, p })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn size(&self, c: Circle) -> u32 {
        match c {
            Circle::M => self.m,
            Circle::N => self.n,
            Circle::P => self.p,
        }
    }

    pub fn total_vertices(&self) -> u32 {
        self.m + self.n + self.p
    }

    pub fn min_part(&self) -> u32 {
        self.m.min(self.n).min(self.p)
    }

    /// Part sizes in nondecreasing order.
    pub fn sorted(&self) -> (u32, u32, u32) {
        let mut v = [self.m, self.n, self.p];
        v.sort_unstable();
        (v[0], v[1], v[2])
    }

    /// True when the sorted sizes are (2, 2, n).
    pub fn is_k22n(&self) -> bool {
        let (a, b, _) = self.sorted();
        a == 2 && b == 2
    }

    pub fn is_balanced(&self) -> bool {
        self.m == self.n && self.n == self.p
    }
}

impl std::fmt::Display for TripartiteSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K_{{{},{},{}}}", self.m, self.n, self.p)
    }
}

/// Binomial coefficient C(n, k); 0 when k > n.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u64 = 1;
    for i in 1..=k {
        result = result * (n - k + i) / i;
    }
    result
}

/// Directed cyclic distance d_n(k, l) = (l - k) mod n between labels in 1..=n.
pub fn cyclic_distance(n: u32, k: u32, l: u32) -> Result<u32> {
    check_label(n, k)?;
    check_label(n, l)?;
    Ok((l + n - k) % n)
}

/// min(d_n(a, b), d_n(b, a)), the undirected cyclic distance.
pub fn min_cyclic_distance(n: u32, a: u32, b: u32) -> Result<u32> {
    let d = cyclic_distance(n, a, b)?;
    Ok(d.min(n - d))
}

fn check_label(n: u32, v: u32) -> Result<()> {
    if v == 0 || v > n {
        return Err(Error::LabelOutOfRange { value: v, limit: n });
    }
    Ok(())
}

/// f_n(u, v) = C(d, 2) + C(n - d, 2) with d = d_n(u, v): the number of
/// crossings induced by a pair of stars whose labels sit at distance d on a
/// circle with n vertices. Symmetric in u and v.
pub fn f(n: u32, u: u32, v: u32) -> Result<u64> {
    let d = cyclic_distance(n, u, v)? as u64;
    Ok(binom(d, 2) + binom(n as u64 - d, 2))
}

pub(crate) fn f_unchecked(n: u64, d: u64) -> u64 {
    binom(d, 2) + binom(n - d, 2)
}

/// Minimum of f_n over label pairs, with its attainment set and the gap to
/// the next value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FMin {
    /// floor(n/2) * floor((n-1)/2)
    pub value: u64,
    /// |u - v| offsets attaining the minimum: {floor(n/2), ceil(n/2)}.
    pub optimal_offsets: Vec<u32>,
    /// Gap between the minimum and the second-smallest value of f_n:
    /// 1 when n is even, 2 when n is odd.
    pub gap: u64,
}

/// Minimum value of f_n over integer label pairs (requires n >= 2).
pub fn f_min(n: u32) -> Result<FMin> {
    if n < 2 {
        return Err(Error::range(format!("f_min requires n >= 2, got {n}")));
    }
    let lo = n / 2;
    let hi = n.div_ceil(2);
    let mut optimal_offsets = vec![lo];
    if hi != lo {
        optimal_offsets.push(hi);
    }
    Ok(FMin {
        value: (n as u64 / 2) * ((n as u64 - 1) / 2),
        optimal_offsets,
        gap: if n.is_multiple_of(2) { 1 } else { 2 },
    })
}

/// A family of labels on `target` indexed by the vertices of `source`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelVector {
    source: Circle,
    target: Circle,
    values: Vec<u32>,
}

impl LabelVector {
    pub fn new(source: Circle, target: Circle, values: Vec<u32>) -> Result<Self> {
        if source == target {
            return Err(Error::SameCircle);
        }
        Ok(LabelVector {
            source,
            target,
            values,
        })
    }

    /// Constant family: every vertex of `source` carries the same label.
    pub fn constant(source: Circle, target: Circle, len: usize, value: u32) -> Result<Self> {
        LabelVector::new(source, target, vec![value; len])
    }

    pub fn source(&self) -> Circle {
        self.source
    }

    pub fn target(&self) -> Circle {
        self.target
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Check length against the source circle and entries against the target
    /// circle of `spec`.
    pub fn validate(&self, spec: &TripartiteSpec) -> Result<()> {
        let expected = spec.size(self.source) as usize;
        if self.values.len() != expected {
            return Err(Error::LengthMismatch {
                from: self.source,
                to: self.target,
                expected,
                got: self.values.len(),
            });
        }
        let limit = spec.size(self.target);
        for &v in &self.values {
            check_label(limit, v)?;
        }
        Ok(())
    }
}

/// Crossings between edges of one circle pair: sum of f over unordered label
/// pairs of the family.
pub fn mono_count(target_size: u32, x: &LabelVector) -> Result<u64> {
    for &v in x.values() {
        check_label(target_size, v)?;
    }
    let vals = x.values();
    let mut total = 0u64;
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            total += f(target_size, vals[i], vals[j])?;
        }
    }
    Ok(total)
}

/// Crossings between the edge sets A-C and B-C: full double sum of f over the
/// two y-families on the shared circle C of size `third_size`.
pub fn bi_count(third_size: u32, ya: &LabelVector, yb: &LabelVector) -> Result<u64> {
    if ya.target() != yb.target() {
        return Err(Error::TargetMismatch(ya.target(), yb.target()));
    }
    for &v in ya.values().iter().chain(yb.values()) {
        check_label(third_size, v)?;
    }
    let mut total = 0u64;
    for &u in ya.values() {
        for &v in yb.values() {
            total += f(third_size, u, v)?;
        }
    }
    Ok(total)
}

/// The full label description of a tripartite-circle drawing: one x-family
/// per cyclic pair and one y-family per ordered pair of distinct circles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DrawingLabels {
    spec: TripartiteSpec,
    /// x-families for the cyclic pairs (M,N), (N,P), (P,M), in that order.
    x: Vec<LabelVector>,
    /// y-families for all six ordered pairs, in lexicographic pair order
    /// (M,N), (M,P), (N,M), (N,P), (P,M), (P,N).
    y: Vec<LabelVector>,
}

const Y_PAIRS: [(Circle, Circle); 6] = [
    (Circle::M, Circle::N),
    (Circle::M, Circle::P),
    (Circle::N, Circle::M),
    (Circle::N, Circle::P),
    (Circle::P, Circle::M),
    (Circle::P, Circle::N),
];

impl DrawingLabels {
    /// Build and validate a label description. `x` must contain exactly the
    /// three cyclic-pair families and `y` exactly the six ordered-pair
    /// families, in any order and without duplicates.
    pub fn new(spec: TripartiteSpec, x: Vec<LabelVector>, y: Vec<LabelVector>) -> Result<Self> {
        let x = Self::arrange(x, &Circle::cyclic_pairs(), "x")?;
        let y = Self::arrange(y, &Y_PAIRS, "y")?;
        for lv in x.iter().chain(y.iter()) {
            lv.validate(&spec)?;
        }
        Ok(DrawingLabels { spec, x, y })
    }

    fn arrange(
        given: Vec<LabelVector>,
        pairs: &[(Circle, Circle)],
        _kind: &str,
    ) -> Result<Vec<LabelVector>> {
        let mut slots: Vec<Option<LabelVector>> = pairs.iter().map(|_| None).collect();
        for lv in given {
            let idx = pairs
                .iter()
                .position(|&(s, t)| s == lv.source() && t == lv.target())
                .ok_or(Error::BadFamily {
                    from: lv.source(),
                    to: lv.target(),
                    problem: "not one of the required pairs",
                })?;
            if slots[idx].is_some() {
                return Err(Error::BadFamily {
                    from: lv.source(),
                    to: lv.target(),
                    problem: "duplicated",
                });
            }
            slots[idx] = Some(lv);
        }
        slots
            .into_iter()
            .zip(pairs)
            .map(|(slot, &(s, t))| {
                slot.ok_or(Error::BadFamily {
                    from: s,
                    to: t,
                    problem: "missing",
                })
            })
            .collect()
    }

    pub fn spec(&self) -> &TripartiteSpec {
        &self.spec
    }

    /// x-family of the cyclic pair starting at `a`.
    pub fn x(&self, a: Circle) -> &LabelVector {
        let idx = Circle::cyclic_pairs()
            .iter()
            .position(|&(s, _)| s == a)
            .unwrap();
        &self.x[idx]
    }

    /// y-family for the ordered pair (source, target).
    pub fn y(&self, source: Circle, target: Circle) -> &LabelVector {
        let idx = Y_PAIRS
            .iter()
            .position(|&(s, t)| s == source && t == target)
            .unwrap();
        &self.y[idx]
    }
}

/// Per-type crossing counts of a drawing: three monochromatic components
/// (one per circle pair) and three bichromatic components (one per cyclic
/// triple, keyed by the shared circle the two edge colors meet on).
///
/// Serializes with named keys:
/// `{"mono": {"mn": .., "np": .., "pm": ..}, "bi": {"mp_np": .., "nm_pm": ..,
/// "pn_mn": ..}, "total": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BreakdownRepr", try_from = "BreakdownRepr")]
pub struct CrossingBreakdown {
    /// MN/MN, NP/NP, PM/PM crossings, keyed like `Circle::cyclic_pairs()`.
    pub mono: [u64; 3],
    /// MP/NP, NM/PM, PN/MN crossings, keyed like `Circle::cyclic_triples()`:
    /// entry k counts crossings between the two edge classes incident to the
    /// last circle of triple k.
    pub bi: [u64; 3],
    pub total: u64,
}

#[derive(Serialize, Deserialize)]
struct MonoRepr {
    mn: u64,
    np: u64,
    pm: u64,
}

#[derive(Serialize, Deserialize)]
struct BiRepr {
    mp_np: u64,
    nm_pm: u64,
    pn_mn: u64,
}

#[derive(Serialize, Deserialize)]
struct BreakdownRepr {
    mono: MonoRepr,
    bi: BiRepr,
    total: u64,
}

impl From<CrossingBreakdown> for BreakdownRepr {
    fn from(b: CrossingBreakdown) -> Self {
        BreakdownRepr {
            mono: MonoRepr {
                mn: b.mono[0],
                np: b.mono[1],
                pm: b.mono[2],
            },
            bi: BiRepr {
                mp_np: b.bi[0],
                nm_pm: b.bi[1],
                pn_mn: b.bi[2],
            },
            total: b.total,
        }
    }
}

impl TryFrom<BreakdownRepr> for CrossingBreakdown {
    type Error = String;

    fn try_from(r: BreakdownRepr) -> std::result::Result<Self, String> {
        let b = CrossingBreakdown::new(
            [r.mono.mn, r.mono.np, r.mono.pm],
            [r.bi.mp_np, r.bi.nm_pm, r.bi.pn_mn],
        );
        if b.total != r.total {
            return Err(format!(
                "total {} does not match component sum {}",
                r.total, b.total
            ));
        }
        Ok(b)
    }
}

impl CrossingBreakdown {
    pub fn new(mono: [u64; 3], bi: [u64; 3]) -> Self {
        let total = mono.iter().sum::<u64>() + bi.iter().sum::<u64>();
        CrossingBreakdown { mono, bi, total }
    }

    /// Monochromatic component of the cyclic pair starting at `a`.
    pub fn mono_for(&self, a: Circle) -> u64 {
        let idx = Circle::cyclic_pairs()
            .iter()
            .position(|&(s, _)| s == a)
            .unwrap();
        self.mono[idx]
    }

    /// Bichromatic component of the cyclic triple ending at `c` (the circle
    /// shared by the two crossing edge classes).
    pub fn bi_for(&self, c: Circle) -> u64 {
        let idx = Circle::cyclic_triples()
            .iter()
            .position(|&(_, _, last)| last == c)
            .unwrap();
        self.bi[idx]
    }
}

/// Total crossing count of the drawing described by `labels`, split into the
/// six components: for each cyclic triple (A,B,C), the x-family of (A,B)
/// contributes the monochromatic term and the pair of y-families on C the
/// bichromatic term.
pub fn total_count(labels: &DrawingLabels) -> CrossingBreakdown {
    let spec = labels.spec();
    let mut mono = [0u64; 3];
    let mut bi = [0u64; 3];
    for (idx, (a, b, c)) in Circle::cyclic_triples().into_iter().enumerate() {
        mono[idx] = mono_count(spec.size(b), labels.x(a)).expect("validated labels");
        bi[idx] = bi_count(spec.size(c), labels.y(a, c), labels.y(b, c)).expect("validated labels");
    }
    CrossingBreakdown::new(mono, bi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_basics() {
        assert_eq!(binom(0, 2), 0);
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(4, 4), 1);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(200, 4), 64_684_950);
    }

    #[test]
    fn cyclic_distance_examples() {
        assert_eq!(cyclic_distance(5, 2, 4).unwrap(), 2);
        assert_eq!(cyclic_distance(5, 4, 2).unwrap(), 3);
        assert_eq!(cyclic_distance(7, 3, 3).unwrap(), 0);
        assert!(cyclic_distance(5, 0, 3).is_err());
        assert!(cyclic_distance(5, 1, 6).is_err());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f(5, 1, 3).unwrap(), 4);
        assert_eq!(f(5, 1, 1).unwrap(), 10);
        assert_eq!(f(4, 1, 3).unwrap(), 2);
    }

    #[test]
    fn f_min_examples() {
        let m7 = f_min(7).unwrap();
        assert_eq!(
            (m7.value, m7.optimal_offsets.clone(), m7.gap),
            (9, vec![3, 4], 2)
        );
        let m6 = f_min(6).unwrap();
        assert_eq!(
            (m6.value, m6.optimal_offsets.clone(), m6.gap),
            (6, vec![3], 1)
        );
        // n = 2 checked against brute force over all pairs: f_2 takes the
        // values {0, 1}, minimum 0 at |u-v| = 1, gap 1.
        let m2 = f_min(2).unwrap();
        assert_eq!(
            (m2.value, m2.optimal_offsets.clone(), m2.gap),
            (0, vec![1], 1)
        );
        assert!(f_min(1).is_err());
    }

    #[test]
    fn f_minimum_attainment_exhaustive() {
        // f(n,u,v) >= floor(n/2)floor((n-1)/2), equality iff
        // |u-v| in {floor(n/2), ceil(n/2)}, for every n <= 100.
        for n in 2..=100u32 {
            let fm = f_min(n).unwrap();
            let mut second = u64::MAX;
            for u in 1..=n {
                for v in 1..=n {
                    let val = f(n, u, v).unwrap();
                    assert!(val >= fm.value);
                    let offset = u.abs_diff(v);
                    let attains = fm.optimal_offsets.contains(&offset);
                    assert_eq!(val == fm.value, attains, "n={n} u={u} v={v}");
                    if val > fm.value {
                        second = second.min(val);
                    }
                }
            }
            assert_eq!(second - fm.value, fm.gap, "gap at n={n}");
        }
    }

    #[test]
    fn mono_count_examples() {
        let x = LabelVector::new(Circle::M, Circle::N, vec![1, 1]).unwrap();
        assert_eq!(mono_count(2, &x).unwrap(), 1);
        let x = LabelVector::new(Circle::M, Circle::N, vec![2, 1]).unwrap();
        assert_eq!(mono_count(2, &x).unwrap(), 0);
        let x = LabelVector::new(Circle::M, Circle::N, vec![1, 1, 1]).unwrap();
        assert_eq!(mono_count(5, &x).unwrap(), 30);
        assert!(mono_count(2, &LabelVector::new(Circle::M, Circle::N, vec![3]).unwrap()).is_err());
    }

    #[test]
    fn mono_count_all_equal_is_product_of_binomials() {
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                let x = LabelVector::constant(Circle::M, Circle::N, a as usize, 1).unwrap();
                assert_eq!(
                    mono_count(b, &x).unwrap(),
                    binom(a as u64, 2) * binom(b as u64, 2)
                );
            }
        }
    }

    #[test]
    fn mono_count_arithmetic_progression_matches_cr2() {
        // Equally spaced labels (step b/a when a divides b) describe the
        // crossing-minimal bipartite-circle drawing.
        for a in 1..=6u32 {
            for mult in 1..=4u32 {
                let b = a * mult;
                let values: Vec<u32> = (0..a).map(|i| i * mult + 1).collect();
                let x = LabelVector::new(Circle::M, Circle::N, values).unwrap();
                assert_eq!(
                    mono_count(b, &x).unwrap(),
                    crate::closed_forms::cr2(a, b),
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn bi_count_examples() {
        let ya = LabelVector::new(Circle::M, Circle::P, vec![1]).unwrap();
        let yb = LabelVector::new(Circle::N, Circle::P, vec![3]).unwrap();
        assert_eq!(bi_count(4, &ya, &yb).unwrap(), 2);

        let ya = LabelVector::new(Circle::M, Circle::P, vec![5, 5]).unwrap();
        let yb = LabelVector::new(Circle::N, Circle::P, vec![2, 2, 2]).unwrap();
        assert_eq!(bi_count(5, &ya, &yb).unwrap(), 24);

        let ya = LabelVector::new(Circle::M, Circle::P, vec![1]).unwrap();
        let yb = LabelVector::new(Circle::N, Circle::P, vec![1]).unwrap();
        assert_eq!(bi_count(3, &ya, &yb).unwrap(), 3);

        let bad = LabelVector::new(Circle::N, Circle::M, vec![1]).unwrap();
        assert!(bi_count(3, &ya, &bad).is_err());
    }

    #[test]
    fn bi_count_minimum_exhaustive_small() {
        // bi_count >= a*b*floor(c/2)floor((c-1)/2) over all y-family pairs,
        // a, b <= 2, c <= 8.
        for a in 1..=2usize {
            for b in 1..=2usize {
                for c in 2..=8u32 {
                    let floor_min = (c as u64 / 2) * ((c as u64 - 1) / 2);
                    let mut min_seen = u64::MAX;
                    let total_a = (c as u64).pow(a as u32);
                    let total_b = (c as u64).pow(b as u32);
                    for ia in 0..total_a {
                        let ya = decode(ia, a, c);
                        let ya = LabelVector::new(Circle::M, Circle::P, ya).unwrap();
                        for ib in 0..total_b {
                            let yb = decode(ib, b, c);
                            let yb = LabelVector::new(Circle::N, Circle::P, yb).unwrap();
                            let count = bi_count(c, &ya, &yb).unwrap();
                            assert!(count >= (a as u64) * (b as u64) * floor_min);
                            min_seen = min_seen.min(count);
                        }
                    }
                    assert_eq!(min_seen, (a as u64) * (b as u64) * floor_min);
                }
            }
        }
    }

    fn decode(mut code: u64, len: usize, base: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push((code % base as u64) as u32 + 1);
            code /= base as u64;
        }
        out
    }

    fn arbitrary_labels(max: u32) -> impl Strategy<Value = DrawingLabels> {
        (1..=max, 1..=max, 1..=max).prop_flat_map(|(m, n, p)| {
            let spec = TripartiteSpec::new(m, n, p).unwrap();
            let family = |s: Circle, t: Circle| {
                let len = spec.size(s) as usize;
                let limit = spec.size(t);
                proptest::collection::vec(1..=limit, len)
                    .prop_map(move |v| LabelVector::new(s, t, v).unwrap())
            };
            let xs = Circle::cyclic_pairs().map(|(s, t)| family(s, t));
            let ys = Y_PAIRS.map(|(s, t)| family(s, t));
            (xs, ys).prop_map(move |(x, y)| {
                DrawingLabels::new(spec, x.into_iter().collect(), y.into_iter().collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn f_is_symmetric(n in 1..60u32, u in 1..60u32, v in 1..60u32) {
            prop_assume!(u <= n && v <= n);
            prop_assert_eq!(f(n, u, v).unwrap(), f(n, v, u).unwrap());
        }

        #[test]
        fn breakdown_total_is_component_sum(labels in arbitrary_labels(5)) {
            let bd = total_count(&labels);
            let sum: u64 = bd.mono.iter().sum::<u64>() + bd.bi.iter().sum::<u64>();
            prop_assert_eq!(bd.total, sum);
        }
    }

    #[test]
    fn drawing_labels_rejects_bad_families() {
        let spec = TripartiteSpec::new(2, 2, 2).unwrap();
        let x: Vec<_> = Circle::cyclic_pairs()
            .into_iter()
            .map(|(s, t)| LabelVector::constant(s, t, 2, 1).unwrap())
            .collect();
        let y: Vec<_> = Y_PAIRS
            .into_iter()
            .map(|(s, t)| LabelVector::constant(s, t, 2, 1).unwrap())
            .collect();
        assert!(DrawingLabels::new(spec, x.clone(), y.clone()).is_ok());

        // duplicate x family
        let mut x_dup = x.clone();
        x_dup[1] = x_dup[0].clone();
        assert!(DrawingLabels::new(spec, x_dup, y.clone()).is_err());

        // missing y family
        let y_missing = y[..5].to_vec();
        assert!(DrawingLabels::new(spec, x.clone(), y_missing).is_err());

        // label out of range
        let mut y_bad = y;
        y_bad[0] = LabelVector::new(Circle::M, Circle::N, vec![3, 1]).unwrap();
        assert!(DrawingLabels::new(spec, x, y_bad).is_err());
    }

    #[test]
    fn deserialization_enforces_invariants() {
        let spec: TripartiteSpec = serde_json::from_str(r#"{"m":4,"n":5,"p":6}"#).unwrap();
        assert_eq!((spec.m(), spec.n(), spec.p()), (4, 5, 6));
        assert!(serde_json::from_str::<TripartiteSpec>(r#"{"m":0,"n":1,"p":1}"#).is_err());

        let bd: CrossingBreakdown = serde_json::from_str(
            r#"{"mono":{"mn":1,"np":2,"pm":3},"bi":{"mp_np":4,"nm_pm":5,"pn_mn":6},"total":21}"#,
        )
        .unwrap();
        assert_eq!(bd.mono, [1, 2, 3]);
        assert_eq!(bd.bi, [4, 5, 6]);
        // inconsistent total is rejected
        assert!(serde_json::from_str::<CrossingBreakdown>(
            r#"{"mono":{"mn":1,"np":2,"pm":3},"bi":{"mp_np":4,"nm_pm":5,"pn_mn":6},"total":20}"#,
        )
        .is_err());
    }
}
