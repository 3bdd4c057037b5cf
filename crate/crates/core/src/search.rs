//! Deterministic search for a "generic" element of a subspace.
//!
//! Candidates are integer combinations of a basis, visited in shells of
//! growing max-norm (heights 1, 2, 4, ...). Inside a shell the coordinates
//! run lexicographically over the value order 1, −1, 2, −2, ..., 0, so the
//! first candidate is always the plain sum of the basis vectors.
//!
//! When the acceptance test is "some polynomial in the coordinates is
//! nonzero" and the caller knows a bound `d_i` on its degree in coordinate
//! `i`, exhausting the cube {−h..h}^k with 2h+1 > d_i for every `i` proves
//! the polynomial vanishes identically.

use crate::linalg::{Subspace, Vector};
use crate::scalar::Scalar;

/// Default largest height, overridable with `WHOPF_MAX_HEIGHT`.
pub const DEFAULT_MAX_HEIGHT: i64 = 8;

/// Cap on the number of candidates tested in one search.
pub const MAX_CANDIDATES: usize = 200_000;

pub fn max_height() -> i64 {
    std::env::var("WHOPF_MAX_HEIGHT")
        .ok()
        .and_then(|v| v.trim().parse::<i64>().ok())
        .filter(|h| *h >= 1)
        .unwrap_or(DEFAULT_MAX_HEIGHT)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Search {
    /// An accepted element with its integer coordinates.
    Found { coords: Vec<i64>, element: Vector },
    /// The grid certificate shows no element of the span is accepted.
    NoneExists,
    /// Budget exhausted before either outcome; `height` is the last shell finished.
    Undecided { height: i64 },
}

impl Search {
    pub fn found(self) -> Option<Vector> {
        match self {
            Search::Found { element, .. } => Some(element),
            _ => None,
        }
    }
}

fn heights(limit: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut h = 1;
    while h < limit {
        out.push(h);
        h *= 2;
    }
    out.push(limit);
    out
}

fn value_order(h: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity((2 * h + 1) as usize);
    for v in 1..=h {
        out.push(v);
        out.push(-v);
    }
    out.push(0);
    out
}

/// Searches `span(basis)` for an element passing `accept`.
///
/// `degrees[i]` bounds the degree in coordinate `i` of the polynomial whose
/// non-vanishing `accept` tests; pass `None` when no such bound is known and
/// the search can then only find or give up.
pub fn search_span<F>(sub: &Subspace, degrees: Option<&[usize]>, mut accept: F) -> Search
where
    F: FnMut(&Vector) -> bool,
{
    search_with_limit(sub, degrees, max_height(), &mut accept)
}

pub fn search_with_limit<F>(sub: &Subspace, degrees: Option<&[usize]>, limit: i64, accept: &mut F) -> Search
where
    F: FnMut(&Vector) -> bool,
{
    let k = sub.dim();
    if k == 0 {
        let zero = sub.combination(&[]);
        return if accept(&zero) {
            Search::Found { coords: vec![], element: zero }
        } else {
            Search::NoneExists
        };
    }
    let needed = degrees.map(|d| d.iter().map(|&x| x.div_ceil(2) as i64).max().unwrap_or(0).max(1));
    let mut tested = 0usize;
    let mut prev = 0i64;
    let mut finished = 0i64;
    for h in heights(limit) {
        let values = value_order(h);
        let m = values.len();
        let mut idx = vec![0usize; k];
        loop {
            let coords: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
            if coords.iter().any(|c| c.abs() > prev) {
                tested += 1;
                if tested > MAX_CANDIDATES {
                    return Search::Undecided { height: finished };
                }
                let s: Vec<Scalar> = coords.iter().map(|&c| Scalar::int(c)).collect();
                let element = sub.combination(&s);
                if accept(&element) {
                    return Search::Found { coords, element };
                }
            }
            // odometer, last coordinate fastest
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < m {
                    break;
                }
                idx[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
        finished = h;
        prev = h;
        if let Some(need) = needed {
            if h >= need {
                return Search::NoneExists;
            }
        }
    }
    Search::Undecided { height: finished }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn plane() -> Subspace {
        Subspace::from_vectors(2, vec![unit_vector(2, 0), unit_vector(2, 1)])
    }

    #[test]
    fn first_candidate_is_basis_sum() {
        let r = search_with_limit(&plane(), None, 8, &mut |_| true);
        assert_eq!(
            r,
            Search::Found {
                coords: vec![1, 1],
                element: vec![Scalar::int(1), Scalar::int(1)]
            }
        );
    }

    #[test]
    fn shells_are_visited_in_order() {
        let mut seen = Vec::new();
        let r = search_with_limit(&plane(), None, 2, &mut |v| {
            seen.push(v.clone());
            false
        });
        assert_eq!(r, Search::Undecided { height: 2 });
        assert_eq!(seen.len(), 25 - 1);
        assert_eq!(seen[0], vec![Scalar::int(1), Scalar::int(1)]);
        assert!(seen[..8]
            .iter()
            .all(|v| v.iter().all(|c| c.to_i64().unwrap().abs() <= 1)));
    }

    #[test]
    fn certificate_for_identically_zero() {
        // x·y − y·x never accepted; degree 1 in each coordinate
        let r = search_with_limit(&plane(), Some(&[1, 1]), 8, &mut |_| false);
        assert_eq!(r, Search::NoneExists);
    }

    #[test]
    fn finds_off_diagonal_points() {
        // accept x ≠ y
        let r = search_with_limit(&plane(), Some(&[1, 1]), 8, &mut |v| v[0] != v[1]);
        assert_eq!(r.found(), Some(vec![Scalar::int(1), Scalar::int(-1)]));
    }

    #[test]
    fn empty_span() {
        let z = Subspace::zero(3);
        assert_eq!(search_with_limit(&z, Some(&[]), 8, &mut |_| false), Search::NoneExists);
        assert!(matches!(search_with_limit(&z, None, 8, &mut |_| true), Search::Found { .. }));
    }
}
