//! Closed-form bounds and exact values for tripartite-circle crossing
//! numbers, plus the Harary-Hill comparison machinery.

use serde::{Deserialize, Serialize};

use crate::calculus::{binom, Circle, TripartiteSpec};
use crate::error::{Error, Result};

/// Crossing number of the cylindrical (bipartite-circle) drawing of K_{n,n}:
/// n * C(n, 3).
pub fn cr2_balanced(n: u32) -> u64 {
    n as u64 * binom(n as u64, 3)
}

/// Bipartite-circle crossing number of K_{m,n}. Symmetric in its arguments;
/// evaluates the floor-sum formula with the smaller side indexing the sums.
/// When m divides n this equals n(m-1)(2mn-3m-n)/12.
pub fn cr2(m: u32, n: u32) -> u64 {
    let (m, n) = (m.min(n) as u64, m.max(n) as u64);
    let steps: Vec<u64> = (0..m).map(|i| n * i / m).collect();
    let mut squares = 0i64;
    let mut sum = 0i64;
    for i in 0..m as usize {
        for j in i + 1..m as usize {
            let d = (steps[j] - steps[i]) as i64;
            squares += d * d;
            sum += d;
        }
    }
    let base = (binom(n, 2) * binom(m, 2)) as i64;
    (base + squares - n as i64 * sum) as u64
}

fn floor_halves(c: u64) -> u64 {
    (c / 2) * ((c - 1) / 2)
}

/// Lower bound: sum over cyclic triples of cr2(K_{a,b}) + ab*floor((c-1)/2)floor(c/2).
pub fn lower_general(spec: &TripartiteSpec) -> u64 {
    Circle::cyclic_triples()
        .into_iter()
        .map(|(a, b, c)| {
            let (a, b, c) = (
                spec.size(a) as u64,
                spec.size(b) as u64,
                spec.size(c) as u64,
            );
            cr2(a as u32, b as u32) + a * b * floor_halves(c)
        })
        .sum()
}

/// Lower bound improved by 2 when all three parts have at least 3 vertices.
pub fn lower_improved(spec: &TripartiteSpec) -> u64 {
    lower_general(spec) + if spec.min_part() >= 3 { 2 } else { 0 }
}

/// Upper bound: sum over cyclic triples of C(a,2)C(b,2) + ab*floor((c-1)/2)floor(c/2),
/// attained by the linear (stripe) construction.
pub fn upper_general(spec: &TripartiteSpec) -> u64 {
    Circle::cyclic_triples()
        .into_iter()
        .map(|(a, b, c)| {
            let (a, b, c) = (
                spec.size(a) as u64,
                spec.size(b) as u64,
                spec.size(c) as u64,
            );
            binom(a, 2) * binom(b, 2) + a * b * floor_halves(c)
        })
        .sum()
}

/// Balanced-case bounds for K_{n,n,n}, n >= 3:
/// (3nC(n,3) + 3n^2 floor(n/2)floor((n-1)/2) + 2, 3C(n,2)^2 + same bichromatic term).
pub fn balanced_bounds(n: u32) -> Result<(u64, u64)> {
    if n < 3 {
        return Err(Error::range(format!(
            "balanced bounds require n >= 3, got {n}"
        )));
    }
    let nn = n as u64;
    let bichromatic = 3 * nn * nn * floor_halves(nn);
    let lower = 3 * nn * binom(nn, 3) + bichromatic + 2;
    let upper = 3 * binom(nn, 2) * binom(nn, 2) + bichromatic;
    Ok((lower, upper))
}

/// Exact tripartite-circle crossing number of K_{2,2,n}:
/// 6*floor(n/2)floor((n-1)/2) + 2n - 3 for n >= 3, and 3 for n = 2.
pub fn k22n_exact(n: u32) -> Result<u64> {
    match n {
        0 | 1 => Err(Error::range(format!(
            "K_{{2,2,n}} requires n >= 2, got {n}"
        ))),
        2 => Ok(3),
        _ => Ok(6 * floor_halves(n as u64) + 2 * n as u64 - 3),
    }
}

/// Crossing counts of the improved balanced drawing that splits one vertex's
/// edges between the two half-cylinders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImprovedUpper {
    pub total: u64,
    /// Monochromatic crossings between one pair of circles.
    pub mono_per_pair: u64,
    /// Bichromatic crossings charged to one cyclic triple.
    pub bi_per_triple: u64,
    /// Crossings saved relative to the plain construction:
    /// 3/4(n^3 - n^2 - n + 1) for odd n, 3/2(n^3 - 3n^2) for even n.
    pub saved: u64,
}

/// Improved upper bound for K_{n,n,n}, n >= 3, with its parity-split
/// components. The total is 3/4(2n^4 - 5n^3 + 3n^2 + n - 1) for odd n and
/// 3/4(2n^4 - 6n^3 + 7n^2) for even n.
pub fn improved_upper_balanced(n: u32) -> Result<ImprovedUpper> {
    if n < 3 {
        return Err(Error::range(format!(
            "improved balanced upper bound requires n >= 3, got {n}"
        )));
    }
    let nn = n as u64;
    let half_pair = binom(nn / 2, 2) + binom(nn.div_ceil(2), 2);
    let (mono, bi) = if n % 2 == 1 {
        let mono = binom(nn - 1, 2) * binom(nn, 2) + (nn - 1) * half_pair;
        let bi = nn * nn * half_pair;
        (mono, bi)
    } else {
        let h = nn / 2;
        let mono = 2 * (binom(h - 1, 2) * nn * nn + (nn - 2) * nn * nn / 2 + nn * nn / 4);
        let bi = binom(nn - 1, 2) * binom(nn - 1, 2)
            + 2 * (nn - 1) * (binom(h - 1, 2) + binom(h, 2))
            + h * h
            + (h - 1) * (h - 1);
        (mono, bi)
    };
    let total = 3 * (mono + bi);
    let spec = TripartiteSpec::new(n, n, n).unwrap();
    let saved = upper_general(&spec) - total;
    Ok(ImprovedUpper {
        total,
        mono_per_pair: mono,
        bi_per_triple: bi,
        saved,
    })
}

/// Harary-Hill bound H(n) = 1/4 floor(n/2)floor((n-1)/2)floor((n-2)/2)floor((n-3)/2).
pub fn harary_hill(n: u32) -> u64 {
    let n = n as u64;
    (n / 2)
        * ((n.saturating_sub(1)) / 2)
        * ((n.saturating_sub(2)) / 2)
        * ((n.saturating_sub(3)) / 2)
        / 4
}

/// Registry of externally established values: verified crossing numbers of
/// complete graphs up to K_12, the two bespoke balanced drawings, and the
/// exact optimum of K_{2,2,2}. Read-only.
pub struct KnownValueRegistry;

impl KnownValueRegistry {
    /// cr(K_n) for 3 <= n <= 12, the range where the Harary-Hill value is a
    /// verified crossing number rather than a conjecture.
    pub fn cr_complete(n: u32) -> Option<u64> {
        if (3..=12).contains(&n) {
            Some(harary_hill(n))
        } else {
            None
        }
    }

    /// Upper bounds from bespoke hand drawings of balanced graphs that no
    /// programmatic construction here reproduces.
    pub fn bespoke_upper(spec: &TripartiteSpec) -> Option<u64> {
        match (spec.m(), spec.n(), spec.p()) {
            (3, 3, 3) => Some(42),
            (4, 4, 4) => Some(175),
            _ => None,
        }
    }

    /// Exactly known small values outside the K_{2,2,n} formula range.
    pub fn exact_small(spec: &TripartiteSpec) -> Option<u64> {
        match spec.sorted() {
            (2, 2, 2) => Some(3),
            _ => None,
        }
    }
}

/// Lower bound via the complete graph: a tripartite-circle drawing of
/// K_{m,n,p} extends to a drawing of K_{m+n+p} by adding straight chords, so
/// cr3(K_{m,n,p}) >= cr(K_{m+n+p}) - C(m,4) - C(n,4) - C(p,4). Available only
/// while cr(K_{m+n+p}) is a verified value (m+n+p <= 12); clamped at zero.
pub fn lower_via_complete(spec: &TripartiteSpec) -> Option<u64> {
    let cr = KnownValueRegistry::cr_complete(spec.total_vertices())?;
    let chords = binom(spec.m() as u64, 4) + binom(spec.n() as u64, 4) + binom(spec.p() as u64, 4);
    Some(cr.saturating_sub(chords))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerMethod {
    TheoremGeneral,
    TheoremGeneralPlus2,
    CompleteGraphDecomposition,
    ExactK22n,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperMethod {
    TheoremGeneral,
    LinearConstruction,
    ImprovedRemark,
    ExactK22n,
    RegisteredConstant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate<M> {
    pub method: M,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound<M> {
    pub value: u64,
    pub method: M,
    /// Every applicable producer, in method order, for audit output.
    pub candidates: Vec<Candidate<M>>,
}

/// Best lower and upper bound for one vertex-count triple, with the winning
/// producer and all evaluated candidates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub spec: TripartiteSpec,
    pub lower: Bound<LowerMethod>,
    pub upper: Bound<UpperMethod>,
}

/// Evaluate every applicable bound producer and keep the best on each side.
/// Ties go to the producer listed first in its method enum.
pub fn best_bounds(spec: &TripartiteSpec) -> BoundsReport {
    let mut lower = vec![Candidate {
        method: LowerMethod::TheoremGeneral,
        value: lower_general(spec),
    }];
    if spec.min_part() >= 3 {
        lower.push(Candidate {
            method: LowerMethod::TheoremGeneralPlus2,
            value: lower_improved(spec),
        });
    }
    if let Some(value) = lower_via_complete(spec) {
        lower.push(Candidate {
            method: LowerMethod::CompleteGraphDecomposition,
            value,
        });
    }
    let k22n = if spec.is_k22n() {
        let (_, _, n) = spec.sorted();
        Some(k22n_exact(n).expect("sorted k22n spec has n >= 2"))
    } else {
        None
    };
    if let Some(value) = k22n {
        lower.push(Candidate {
            method: LowerMethod::ExactK22n,
            value,
        });
    }

    let mut upper = vec![
        Candidate {
            method: UpperMethod::TheoremGeneral,
            value: upper_general(spec),
        },
        Candidate {
            method: UpperMethod::LinearConstruction,
            value: crate::calculus::total_count(&crate::constructions::linear_labels(spec)).total,
        },
    ];
    if spec.is_balanced() && spec.m() >= 3 {
        upper.push(Candidate {
            method: UpperMethod::ImprovedRemark,
            value: improved_upper_balanced(spec.m()).unwrap().total,
        });
    }
    if let Some(value) = k22n {
        upper.push(Candidate {
            method: UpperMethod::ExactK22n,
            value,
        });
    }
    if let Some(value) = KnownValueRegistry::bespoke_upper(spec) {
        upper.push(Candidate {
            method: UpperMethod::RegisteredConstant,
            value,
        });
    }

    let best_lower = lower
        .iter()
        .copied()
        .max_by(|a, b| a.value.cmp(&b.value).then(b.method.cmp(&a.method)))
        .unwrap();
    let best_upper = upper
        .iter()
        .copied()
        .min_by(|a, b| a.value.cmp(&b.value).then(a.method.cmp(&b.method)))
        .unwrap();

    BoundsReport {
        spec: *spec,
        lower: Bound {
            value: best_lower.value,
            method: best_lower.method,
            candidates: lower,
        },
        upper: Bound {
            value: best_upper.value,
            method: best_upper.method,
            candidates: upper,
        },
    }
}

/// Lower bound on the crossings of a balanced restricted 3-circle drawing of
/// the complete graph K_N, compared against the Harary-Hill bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancedThreeCircleBound {
    pub n: u32,
    /// Part sizes q, q, q+r of the balanced split, N = 3q + r, r in {-1,0,1}.
    pub parts: (u32, u32, u32),
    pub value: u64,
    pub harary_hill: u64,
    pub exceeds_hh: bool,
}

/// Balanced restricted 3-circle drawings of K_N split the vertices as
/// (q, q, q+r) and add 2C(q,4) + C(q+r,4) chord crossings on top of the
/// tripartite count. The tripartite term is bounded below by the general
/// cyclic-sum bound, improved by 2 in the exactly balanced case r = 0.
pub fn bcr3_balanced_lower(n: u32) -> Result<BalancedThreeCircleBound> {
    if n < 6 {
        return Err(Error::range(format!(
            "balanced 3-circle bound requires N >= 6, got {n}"
        )));
    }
    let q = (n + 1) / 3;
    let r = n as i64 - 3 * q as i64;
    debug_assert!((-1..=1).contains(&r));
    let third = (q as i64 + r) as u32;
    let spec = TripartiteSpec::new(q, q, third).unwrap();
    let tripartite = if r == 0 {
        lower_improved(&spec)
    } else {
        lower_general(&spec)
    };
    let value = tripartite + 2 * binom(q as u64, 4) + binom(third as u64, 4);
    let hh = harary_hill(n);
    Ok(BalancedThreeCircleBound {
        n,
        parts: (q, q, third),
        value,
        harary_hill: hh,
        exceeds_hh: value > hh,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: u32, n: u32, p: u32) -> TripartiteSpec {
        TripartiteSpec::new(m, n, p).unwrap()
    }

    #[test]
    fn cr2_balanced_examples() {
        assert_eq!(cr2_balanced(3), 3);
        assert_eq!(cr2_balanced(1), 0);
        assert_eq!(cr2_balanced(4), 16);
    }

    #[test]
    fn cr2_examples() {
        assert_eq!(cr2(4, 4), 16);
        assert_eq!(cr2(4, 3), 8);
        assert_eq!(cr2(2, 3), 1);
        assert_eq!(cr2(3, 2), 1);
        assert_eq!(cr2(5, 4), 30);
    }

    #[test]
    fn cr2_matches_balanced_and_divisor_closed_forms() {
        for n in 1..=30u32 {
            assert_eq!(cr2(n, n), cr2_balanced(n));
        }
        for m in 1..=30i64 {
            for n in (m..=30).step_by(m as usize) {
                let closed = n * (m - 1) * (2 * m * n - 3 * m - n) / 12;
                assert_eq!(cr2(m as u32, n as u32) as i64, closed, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn cr2_small_against_label_brute_force() {
        // Independent route: minimize the mono count over all label
        // sequences; the closed form must match.
        use crate::calculus::{mono_count, Circle, LabelVector};
        for m in 1..=3u32 {
            for n in 1..=6u32 {
                let mut best = u64::MAX;
                let total = (n as u64).pow(m);
                for code in 0..total {
                    let mut c = code;
                    let mut vals = Vec::with_capacity(m as usize);
                    for _ in 0..m {
                        vals.push((c % n as u64) as u32 + 1);
                        c /= n as u64;
                    }
                    let x = LabelVector::new(Circle::M, Circle::N, vals).unwrap();
                    best = best.min(mono_count(n, &x).unwrap());
                }
                assert_eq!(best, cr2(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn lower_general_examples() {
        assert_eq!(lower_general(&spec(3, 3, 3)), 36);
        assert_eq!(lower_general(&spec(2, 2, 3)), 6);
        assert_eq!(lower_general(&spec(1, 1, 1)), 0);
    }

    #[test]
    fn lower_improved_examples() {
        assert_eq!(lower_improved(&spec(3, 3, 3)), 38);
        assert_eq!(lower_improved(&spec(5, 5, 5)), 452);
        assert_eq!(
            lower_improved(&spec(2, 2, 5)),
            lower_general(&spec(2, 2, 5))
        );
    }

    #[test]
    fn upper_general_examples() {
        assert_eq!(upper_general(&spec(3, 3, 3)), 54);
        assert_eq!(upper_general(&spec(4, 5, 6)), 576);
        assert_eq!(upper_general(&spec(2, 2, 2)), 3);
    }

    #[test]
    fn balanced_bounds_examples() {
        assert_eq!(balanced_bounds(4).unwrap(), (146, 204));
        assert_eq!(balanced_bounds(10).unwrap(), (9602, 12075));
        assert_eq!(balanced_bounds(7).unwrap(), (2060, 2646));
        assert!(balanced_bounds(2).is_err());
    }

    #[test]
    fn balanced_bounds_agree_with_general_forms() {
        for n in 3..=50 {
            let (lo, hi) = balanced_bounds(n).unwrap();
            let s = spec(n, n, n);
            assert_eq!(lo, lower_improved(&s));
            assert_eq!(hi, upper_general(&s));
        }
    }

    #[test]
    fn lower_never_exceeds_upper_small() {
        for m in 1..=8 {
            for n in 1..=8 {
                for p in 1..=8 {
                    let s = spec(m, n, p);
                    assert!(lower_improved(&s) <= upper_general(&s), "{s}");
                    let report = best_bounds(&s);
                    assert!(report.lower.value <= report.upper.value, "{s}");
                }
            }
        }
    }

    #[test]
    fn k22n_exact_examples() {
        assert_eq!(k22n_exact(3).unwrap(), 9);
        assert_eq!(k22n_exact(2).unwrap(), 3);
        assert_eq!(k22n_exact(10).unwrap(), 137);
        assert!(k22n_exact(1).is_err());
    }

    #[test]
    fn k22n_below_general_upper() {
        for n in 3..=100 {
            assert!(k22n_exact(n).unwrap() <= upper_general(&spec(2, 2, n)));
        }
    }

    #[test]
    fn improved_upper_examples() {
        assert_eq!(improved_upper_balanced(5).unwrap().total, 528);
        assert_eq!(improved_upper_balanced(6).unwrap().total, 1161);
        assert_eq!(improved_upper_balanced(3).unwrap().total, 42);
        assert!(improved_upper_balanced(2).is_err());
    }

    #[test]
    fn improved_upper_closed_forms_and_saved_identity() {
        for n in 3..=100u64 {
            let iu = improved_upper_balanced(n as u32).unwrap();
            let total_closed = if n % 2 == 1 {
                3 * (2 * n * n * n * n - 5 * n * n * n + 3 * n * n + n - 1) / 4
            } else {
                3 * (2 * n * n * n * n - 6 * n * n * n + 7 * n * n) / 4
            };
            assert_eq!(iu.total, total_closed, "n={n}");
            assert_eq!(iu.total, 3 * (iu.mono_per_pair + iu.bi_per_triple));
            let upper = upper_general(&spec(n as u32, n as u32, n as u32));
            assert!(iu.total <= upper);
            let saved_closed = if n % 2 == 1 {
                3 * (n * n * n - n * n - n + 1) / 4
            } else {
                3 * (n * n * n - 3 * n * n) / 2
            };
            assert_eq!(iu.saved, saved_closed, "n={n}");
            assert_eq!(iu.saved, upper - iu.total);
        }
    }

    #[test]
    fn harary_hill_examples() {
        assert_eq!(harary_hill(9), 36);
        assert_eq!(harary_hill(13), 225);
        assert_eq!(harary_hill(3), 0);
        assert_eq!(harary_hill(12), 150);
    }

    #[test]
    fn lower_via_complete_examples() {
        assert_eq!(lower_via_complete(&spec(4, 4, 4)), Some(147));
        assert_eq!(lower_via_complete(&spec(2, 2, 3)), Some(9));
        assert_eq!(
            lower_via_complete(&spec(2, 2, 3)).unwrap(),
            k22n_exact(3).unwrap()
        );
        assert_eq!(lower_via_complete(&spec(5, 5, 5)), None);
    }

    #[test]
    fn best_bounds_examples() {
        let r = best_bounds(&spec(2, 2, 3));
        assert_eq!(r.lower.value, 9);
        assert_eq!(r.lower.method, LowerMethod::CompleteGraphDecomposition);
        assert_eq!(r.upper.value, 9);
        assert_eq!(r.upper.method, UpperMethod::ExactK22n);

        let r = best_bounds(&spec(4, 4, 4));
        assert_eq!((r.lower.value, r.upper.value), (147, 175));
        assert_eq!(r.lower.method, LowerMethod::CompleteGraphDecomposition);
        assert_eq!(r.upper.method, UpperMethod::RegisteredConstant);

        let r = best_bounds(&spec(3, 3, 3));
        assert_eq!((r.lower.value, r.upper.value), (38, 42));
        assert_eq!(r.lower.method, LowerMethod::TheoremGeneralPlus2);
        assert_eq!(r.upper.method, UpperMethod::ImprovedRemark);

        let r = best_bounds(&spec(2, 2, 7));
        assert_eq!((r.lower.value, r.upper.value), (65, 65));
    }

    #[test]
    fn bcr3_examples() {
        let b9 = bcr3_balanced_lower(9).unwrap();
        assert_eq!((b9.value, b9.exceeds_hh), (38, true));
        let b10 = bcr3_balanced_lower(10).unwrap();
        assert_eq!((b10.value, b10.exceeds_hh), (62, true));
        let b13 = bcr3_balanced_lower(13).unwrap();
        assert!(b13.value >= 227);
        assert!(b13.exceeds_hh);
        assert_eq!(b13.parts, (4, 4, 5));
        assert!(bcr3_balanced_lower(5).is_err());
    }

    #[test]
    fn equality_window_against_harary_hill() {
        // k22n_exact(n-4) + C(n-4,4) >= H(n) for n >= 8, equality iff n <= 11.
        for n in 8..=200u32 {
            let lhs = k22n_exact(n - 4).unwrap() + binom(n as u64 - 4, 4);
            let hh = harary_hill(n);
            if (8..=11).contains(&n) {
                assert_eq!(lhs, hh, "n={n}");
            } else {
                assert!(lhs > hh, "n={n}");
            }
        }
    }
}
