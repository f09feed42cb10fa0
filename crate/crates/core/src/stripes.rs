//! Formula-free crossing counter for stripe-structured drawings.
//!
//! The linear construction lives on a cylinder partitioned into six vertical
//! stripes, alternating circle-stripes and bundle-stripes. Within a stripe
//! every edge is monotone, so two edges cross there if and only if their
//! order on one side of the stripe differs from their order on the other,
//! and every pair of edges can cross in at most one stripe. The oracle
//! counts crossings purely by comparing boundary orders; no crossing-count
//! formula is evaluated anywhere in this module.
//!
//! A bundle-stripe is bounded by the two marked lines of one circle pair and
//! contains that pair's straight segments; its boundaries are the two
//! lexicographically ordered passage-point sequences. A circle-stripe
//! contains one circle with every present edge terminating on it. Cutting
//! the stripe along the edge-free horizontal segment left of the circle
//! unrolls its boundary into a single walk: up the top arrival blocks, down
//! the far side through all departure blocks, up again through the bottom
//! arrival blocks, and finally around the circle itself. That walk supplies
//! the passage-point order on one side; the other side is the circle's own
//! vertex order, which is where terminating edges take their position.
//! Each edge thus occupies exactly four positions overall: its two terminal
//! vertices and its two bundle passage points.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::calculus::{Circle, CrossingBreakdown, TripartiteSpec};
use crate::error::{Error, Result};

/// An edge of the complete tripartite graph, directed along the cyclic
/// circle order (target circle = source circle's successor).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId {
    pub source: Circle,
    pub source_vertex: u32,
    pub target: Circle,
    pub target_vertex: u32,
}

impl EdgeId {
    fn endpoint_on(&self, circle: Circle) -> Option<u32> {
        if self.source == circle {
            Some(self.source_vertex)
        } else if self.target == circle {
            Some(self.target_vertex)
        } else {
            None
        }
    }

    fn shared_vertex(&self, other: &EdgeId) -> Option<(Circle, u32)> {
        for circle in Circle::ALL {
            if let (Some(a), Some(b)) = (self.endpoint_on(circle), other.endpoint_on(circle)) {
                if a == b {
                    return Some((circle, a));
                }
            }
        }
        None
    }

    /// Circle that both edges touch (for differently colored edges this is
    /// where their crossing is charged).
    fn shared_circle(&self, other: &EdgeId) -> Option<Circle> {
        Circle::ALL
            .into_iter()
            .find(|&c| self.endpoint_on(c).is_some() && other.endpoint_on(c).is_some())
    }

    /// Unordered pair of circles the edge connects.
    fn color(&self) -> (Circle, Circle) {
        (self.source, self.target)
    }
}

/// One position on a stripe boundary: either an edge passing through, or a
/// vertex of the stripe's circle (the terminal position shared by all edges
/// ending there).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryPoint {
    Passage(EdgeId),
    Vertex { circle: Circle, vertex: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StripeKind {
    /// Between the two marked lines of the pair (source, source.next()).
    Bundle { source: Circle },
    /// Contains one circle; arrivals terminate on it, departures leave it.
    CircleStripe { circle: Circle },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stripe {
    pub kind: StripeKind,
    pub left: Vec<BoundaryPoint>,
    pub right: Vec<BoundaryPoint>,
}

/// Combinatorial stripe model of a drawing: a cyclic sequence of six
/// stripes. Purely order-theoretic; no coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripeDrawing {
    pub spec: TripartiteSpec,
    pub stripes: Vec<Stripe>,
}

struct StripeIndex {
    /// edge -> (left position, right position)
    positions: Vec<(EdgeId, usize, usize)>,
    /// vertices carried by this stripe's boundaries
    vertices: Vec<(Circle, u32)>,
}

fn passage_positions(side: &[BoundaryPoint]) -> Result<HashMap<EdgeId, usize>> {
    let mut map = HashMap::new();
    for (pos, point) in side.iter().enumerate() {
        if let BoundaryPoint::Passage(e) = point {
            if map.insert(*e, pos).is_some() {
                return Err(Error::MalformedStripe(format!(
                    "edge {e:?} appears twice on one boundary"
                )));
            }
        }
    }
    Ok(map)
}

/// Terminal positions: a vertex point gives every incident edge that passes
/// through the opposite boundary its position on this side.
fn add_terminals(
    side: &[BoundaryPoint],
    this_side: &mut HashMap<EdgeId, usize>,
    opposite_passages: &HashMap<EdgeId, usize>,
    vertices: &mut Vec<(Circle, u32)>,
) {
    for (pos, point) in side.iter().enumerate() {
        if let BoundaryPoint::Vertex { circle, vertex } = point {
            vertices.push((*circle, *vertex));
            for e in opposite_passages.keys() {
                if e.endpoint_on(*circle) == Some(*vertex) && !this_side.contains_key(e) {
                    this_side.insert(*e, pos);
                }
            }
        }
    }
}

fn index_stripe(stripe: &Stripe) -> Result<StripeIndex> {
    let left_passages = passage_positions(&stripe.left)?;
    let right_passages = passage_positions(&stripe.right)?;
    let mut left = left_passages.clone();
    let mut right = right_passages.clone();
    let mut vertices = Vec::new();
    add_terminals(&stripe.left, &mut left, &right_passages, &mut vertices);
    add_terminals(&stripe.right, &mut right, &left_passages, &mut vertices);

    let mut positions = Vec::with_capacity(left.len());
    for (e, lpos) in &left {
        match right.get(e) {
            Some(rpos) => positions.push((*e, *lpos, *rpos)),
            None => {
                return Err(Error::MalformedStripe(format!(
                    "edge {e:?} has a left position but no right position"
                )))
            }
        }
    }
    for e in right.keys() {
        if !left.contains_key(e) {
            return Err(Error::MalformedStripe(format!(
                "edge {e:?} has a right position but no left position"
            )));
        }
    }
    positions.sort_unstable();
    Ok(StripeIndex {
        positions,
        vertices,
    })
}

fn count(drawing: &StripeDrawing) -> Result<(u64, CrossingBreakdown)> {
    let mut mono = [0u64; 3];
    let mut bi = [0u64; 3];
    // A pair of edges may cross in at most one stripe; remember where each
    // counted pair was charged so a violation trips immediately.
    let mut charged: HashMap<(EdgeId, EdgeId), usize> = HashMap::new();
    let mut stripe_count: HashMap<EdgeId, u32> = HashMap::new();

    for (stripe_no, stripe) in drawing.stripes.iter().enumerate() {
        let index = index_stripe(stripe)?;
        for (e, _, _) in &index.positions {
            *stripe_count.entry(*e).or_insert(0) += 1;
        }
        for i in 0..index.positions.len() {
            for j in i + 1..index.positions.len() {
                let (e1, l1, r1) = index.positions[i];
                let (e2, l2, r2) = index.positions[j];
                if let Some(v) = e1.shared_vertex(&e2) {
                    if index.vertices.contains(&v) {
                        continue;
                    }
                }
                if (l1 < l2) != (r1 < r2) {
                    let prev = charged.insert((e1, e2), stripe_no);
                    assert!(
                        prev.is_none(),
                        "pair ({e1:?}, {e2:?}) counted in stripes {prev:?} and {stripe_no}"
                    );
                    classify(&e1, &e2, &mut mono, &mut bi);
                }
            }
        }
    }
    for (a, b) in Circle::cyclic_pairs() {
        for va in 1..=drawing.spec.size(a) {
            for vb in 1..=drawing.spec.size(b) {
                let e = EdgeId {
                    source: a,
                    source_vertex: va,
                    target: b,
                    target_vertex: vb,
                };
                let seen = stripe_count.get(&e).copied().unwrap_or(0);
                if seen != 3 {
                    return Err(Error::MalformedStripe(format!(
                        "edge {e:?} present in {seen} stripes, expected 3"
                    )));
                }
            }
        }
    }
    let breakdown = CrossingBreakdown::new(mono, bi);
    Ok((breakdown.total, breakdown))
}

fn classify(e1: &EdgeId, e2: &EdgeId, mono: &mut [u64; 3], bi: &mut [u64; 3]) {
    if e1.color() == e2.color() {
        let idx = Circle::cyclic_pairs()
            .iter()
            .position(|&(s, _)| s == e1.source)
            .unwrap();
        mono[idx] += 1;
    } else {
        let shared = e1
            .shared_circle(e2)
            .expect("crossing edges of different colors share a circle");
        let idx = Circle::cyclic_triples()
            .iter()
            .position(|&(_, _, c)| c == shared)
            .unwrap();
        bi[idx] += 1;
    }
}

/// Total crossing count of a stripe drawing, by boundary-order inversions.
pub fn stripe_oracle(drawing: &StripeDrawing) -> Result<u64> {
    count(drawing).map(|(total, _)| total)
}

/// Crossing count classified into the six components by the colors of the
/// crossing edge pair.
pub fn stripe_breakdown(drawing: &StripeDrawing) -> Result<CrossingBreakdown> {
    count(drawing).map(|(_, breakdown)| breakdown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::upper_general;
    use crate::constructions::linear_stripe_model;

    fn spec(m: u32, n: u32, p: u32) -> TripartiteSpec {
        TripartiteSpec::new(m, n, p).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            stripe_oracle(&linear_stripe_model(&spec(1, 1, 1))).unwrap(),
            0
        );
        assert_eq!(
            stripe_oracle(&linear_stripe_model(&spec(2, 2, 2))).unwrap(),
            3
        );
        assert_eq!(
            stripe_oracle(&linear_stripe_model(&spec(4, 5, 6))).unwrap(),
            576
        );
    }

    #[test]
    fn breakdown_examples() {
        let bd = stripe_breakdown(&linear_stripe_model(&spec(2, 2, 2))).unwrap();
        assert_eq!(bd.mono, [1, 1, 1]);
        assert_eq!(bd.bi, [0, 0, 0]);
        assert_eq!(bd.total, 3);

        let bd = stripe_breakdown(&linear_stripe_model(&spec(3, 3, 3))).unwrap();
        assert_eq!(bd.mono, [9, 9, 9]);
        assert_eq!(bd.bi, [9, 9, 9]);
        assert_eq!(bd.total, 54);

        let bd = stripe_breakdown(&linear_stripe_model(&spec(1, 1, 2))).unwrap();
        assert_eq!(bd.total, 0);
    }

    #[test]
    fn breakdown_components_match_closed_forms() {
        let fh = |c: u64| (c / 2) * ((c - 1) / 2);
        let choose2 = |x: u64| x * (x - 1) / 2;
        for m in 1..=6 {
            for n in 1..=6 {
                for p in 1..=6 {
                    let s = spec(m, n, p);
                    let bd = stripe_breakdown(&linear_stripe_model(&s)).unwrap();
                    for (idx, (a, b, c)) in Circle::cyclic_triples().into_iter().enumerate() {
                        let (a, b, c) = (s.size(a) as u64, s.size(b) as u64, s.size(c) as u64);
                        assert_eq!(bd.mono[idx], choose2(a) * choose2(b), "{s} mono {idx}");
                        assert_eq!(bd.bi[idx], a * b * fh(c), "{s} bi {idx}");
                    }
                    assert_eq!(bd.total, upper_general(&s), "{s}");
                }
            }
        }
    }

    #[test]
    fn reversing_all_boundaries_preserves_count() {
        for s in [spec(3, 4, 5), spec(2, 5, 3), spec(6, 1, 4)] {
            let model = linear_stripe_model(&s);
            let mut reversed = model.clone();
            for stripe in &mut reversed.stripes {
                stripe.left.reverse();
                stripe.right.reverse();
            }
            assert_eq!(
                stripe_oracle(&model).unwrap(),
                stripe_oracle(&reversed).unwrap()
            );
        }
    }

    #[test]
    fn malformed_stripe_is_rejected() {
        let s = spec(2, 2, 2);
        let mut model = linear_stripe_model(&s);
        // Drop one passage point: that edge now misses a side somewhere.
        let removed = model.stripes[1].left.remove(0);
        assert!(matches!(removed, BoundaryPoint::Passage(_)));
        assert!(matches!(
            stripe_oracle(&model),
            Err(Error::MalformedStripe(_))
        ));

        // Drop an edge from both sides of its bundle: it now traverses only
        // two stripes.
        let mut model = linear_stripe_model(&s);
        let gone = match model.stripes[1].left.remove(0) {
            BoundaryPoint::Passage(e) => e,
            BoundaryPoint::Vertex { .. } => unreachable!("bundle boundaries are passages"),
        };
        model.stripes[1]
            .right
            .retain(|pt| !matches!(pt, BoundaryPoint::Passage(e) if *e == gone));
        assert!(matches!(
            stripe_oracle(&model),
            Err(Error::MalformedStripe(_))
        ));
    }
}
