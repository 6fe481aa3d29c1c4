//! Signed chord diagrams and their exact combinatorics: chord interleaving,
//! the signed pair counts c+/c-, signed chord degrees, and the crossing-count
//! expression for the limiting X-integral of a flattened diagram.
//!
//! Everything here is exact integer/rational arithmetic; chord identifiers
//! are 0-based in order of first appearance along the circle, and position 0
//! of the cyclic order is the basepoint.

use crate::rational::{rat, Rational};

/// Sign attached to a chord (crossing), +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A perfect matching of 2n cyclic positions into n signed chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedChordDiagram {
    /// Chord endpoints, `endpoints[i] = [a, b]` with a < b, indexed by chord.
    endpoints: Vec<[usize; 2]>,
    /// Chord index occupying each of the 2n positions.
    chord_at: Vec<usize>,
    signs: Vec<Sign>,
}

impl SignedChordDiagram {
    /// Builds a diagram from per-position chord labels (each chord id must
    /// occur exactly twice) and per-chord signs. Panics on malformed input;
    /// validated input types ([`crate::codecs::KnotDiagram`]) construct
    /// diagrams through [`crate::codecs::KnotDiagram::chord_diagram`].
    pub fn new(chord_at: Vec<usize>, signs: Vec<Sign>) -> SignedChordDiagram {
        let n = signs.len();
        assert_eq!(chord_at.len(), 2 * n, "matching must cover 2n positions");
        let mut endpoints = vec![[usize::MAX; 2]; n];
        for (pos, &c) in chord_at.iter().enumerate() {
            assert!(c < n, "chord id out of range");
            if endpoints[c][0] == usize::MAX {
                endpoints[c][0] = pos;
            } else {
                assert_eq!(endpoints[c][1], usize::MAX, "chord id appears 3+ times");
                endpoints[c][1] = pos;
            }
        }
        for e in &endpoints {
            assert!(e[1] != usize::MAX, "chord id appears once");
        }
        SignedChordDiagram {
            endpoints,
            chord_at,
            signs,
        }
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, chord: usize) -> Sign {
        self.signs[chord]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn endpoints(&self, chord: usize) -> [usize; 2] {
        self.endpoints[chord]
    }

    pub fn with_signs(&self, signs: Vec<Sign>) -> SignedChordDiagram {
        assert_eq!(signs.len(), self.n());
        SignedChordDiagram {
            endpoints: self.endpoints.clone(),
            chord_at: self.chord_at.clone(),
            signs,
        }
    }

    /// Same matching with the given chords' signs negated.
    pub fn with_flipped(&self, flipped: &[usize]) -> SignedChordDiagram {
        let mut signs = self.signs.clone();
        for &c in flipped {
            signs[c] = signs[c].flipped();
        }
        self.with_signs(signs)
    }

    /// Moves the basepoint forward by `offset` positions and relabels chords
    /// in first-appearance order. The underlying cyclic structure is
    /// unchanged.
    pub fn rotated(&self, offset: usize) -> SignedChordDiagram {
        let m = self.chord_at.len();
        if m == 0 {
            return self.clone();
        }
        let mut relabel = vec![usize::MAX; self.n()];
        let mut next = 0;
        let mut chord_at = Vec::with_capacity(m);
        for i in 0..m {
            let old = self.chord_at[(i + offset) % m];
            if relabel[old] == usize::MAX {
                relabel[old] = next;
                next += 1;
            }
            chord_at.push(relabel[old]);
        }
        let mut signs = vec![Sign::Plus; self.n()];
        for old in 0..self.n() {
            signs[relabel[old]] = self.signs[old];
        }
        SignedChordDiagram::new(chord_at, signs)
    }
}

/// True iff chords `a` and `b` interleave: exactly one endpoint of `b` lies
/// strictly between the endpoints of `a` in the cyclic order.
///
/// Panics if either chord id is out of range or `a == b`.
pub fn chords_intersect(d: &SignedChordDiagram, a: usize, b: usize) -> bool {
    assert!(a != b, "a chord does not intersect itself");
    let [a0, a1] = d.endpoints(a);
    let [b0, b1] = d.endpoints(b);
    let inside = |p: usize| p > a0 && p < a1;
    inside(b0) != inside(b1)
}

/// Counts interleaving chord pairs by the product of their signs:
/// `(c_plus, c_minus)`.
pub fn signed_pair_counts(d: &SignedChordDiagram) -> (u64, u64) {
    let mut plus = 0;
    let mut minus = 0;
    for a in 0..d.n() {
        for b in (a + 1)..d.n() {
            if chords_intersect(d, a, b) {
                if d.sign(a) == d.sign(b) {
                    plus += 1;
                } else {
                    minus += 1;
                }
            }
        }
    }
    (plus, minus)
}

/// `c_plus - c_minus` as a signed integer.
pub fn pair_count_difference(d: &SignedChordDiagram) -> i64 {
    let (p, m) = signed_pair_counts(d);
    p as i64 - m as i64
}

/// Signed degree of chord `i`: sum over chords `j` interleaving `i` of
/// `sign(i) * sign(j)`. Even for every diagram realizable as a knot
/// projection; odd values are possible (and returned) for formal data.
pub fn chord_degree(d: &SignedChordDiagram, i: usize) -> i64 {
    let si = d.sign(i).value();
    (0..d.n())
        .filter(|&j| j != i && chords_intersect(d, i, j))
        .map(|j| si * d.sign(j).value())
        .sum()
}

/// Limiting X-integral of a flattened diagram with these crossing signs:
/// `n/16 + (c+ - c-)/4`, exactly.
pub fn ix_limit(d: &SignedChordDiagram) -> Rational {
    rat(d.n() as i64, 16) + rat(pair_count_difference(d), 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 3-crossing trefoil matching 1 2 3 1 2 3.
    fn trefoil(signs: [Sign; 3]) -> SignedChordDiagram {
        SignedChordDiagram::new(vec![0, 1, 2, 0, 1, 2], signs.to_vec())
    }

    #[test]
    fn interleaving_basics() {
        // chords {0,2},{1,3}: interleaved; {0,1},{2,3}: disjoint
        let cross = SignedChordDiagram::new(vec![0, 1, 0, 1], vec![Sign::Plus, Sign::Plus]);
        assert!(chords_intersect(&cross, 0, 1));
        let nest = SignedChordDiagram::new(vec![0, 0, 1, 1], vec![Sign::Plus, Sign::Plus]);
        assert!(!chords_intersect(&nest, 0, 1));
        let t = trefoil([Sign::Plus; 3]);
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    assert!(chords_intersect(&t, a, b));
                }
            }
        }
    }

    #[test]
    fn pair_counts() {
        let empty = SignedChordDiagram::new(vec![], vec![]);
        assert_eq!(signed_pair_counts(&empty), (0, 0));
        assert_eq!(signed_pair_counts(&trefoil([Sign::Plus; 3])), (3, 0));
        assert_eq!(
            signed_pair_counts(&trefoil([Sign::Minus, Sign::Plus, Sign::Plus])),
            (1, 2)
        );
    }

    #[test]
    fn degrees() {
        let lone = SignedChordDiagram::new(vec![0, 0], vec![Sign::Plus]);
        assert_eq!(chord_degree(&lone, 0), 0);
        let t = trefoil([Sign::Plus; 3]);
        for i in 0..3 {
            assert_eq!(chord_degree(&t, i), 2);
        }
        let f = trefoil([Sign::Minus, Sign::Plus, Sign::Plus]);
        assert_eq!(chord_degree(&f, 0), -2);
        assert_eq!(chord_degree(&f, 1), 0);
        assert_eq!(chord_degree(&f, 2), 0);
    }

    #[test]
    fn ix_limit_values() {
        assert_eq!(ix_limit(&SignedChordDiagram::new(vec![], vec![])), rat(0, 1));
        let lone_minus = SignedChordDiagram::new(vec![0, 0], vec![Sign::Minus]);
        assert_eq!(ix_limit(&lone_minus), rat(1, 16));
        assert_eq!(ix_limit(&trefoil([Sign::Plus; 3])), rat(15, 16));
    }

    #[test]
    fn degree_sum_is_twice_pair_difference() {
        let d = trefoil([Sign::Minus, Sign::Plus, Sign::Plus]);
        let total: i64 = (0..3).map(|i| chord_degree(&d, i)).sum();
        assert_eq!(total, 2 * pair_count_difference(&d));
    }

    #[test]
    fn rotation_preserves_pair_counts() {
        let d = trefoil([Sign::Minus, Sign::Plus, Sign::Plus]);
        for k in 0..6 {
            assert_eq!(signed_pair_counts(&d.rotated(k)), signed_pair_counts(&d));
        }
    }
}
