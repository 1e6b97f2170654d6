use std::fmt;

use super::CliffordError;

pub const MAX_DIM: u32 = 63;

/// Diagonal form with `m` entries `+1` followed by `n` entries `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    m: u32,
    n: u32,
}

impl Signature {
    pub fn new(m: u32, n: u32) -> Result<Self, CliffordError> {
        let d = m + n;
        if d == 0 || d > MAX_DIM {
            return Err(CliffordError::InvalidSignature { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> u32 {
        self.m + self.n
    }

    /// `e_i^2`, for 1-based `i`.
    pub fn square(&self, i: u32) -> i8 {
        if i <= self.m {
            1
        } else {
            -1
        }
    }

    fn negative_mask(&self) -> u64 {
        let all = Blade::full(self.dim()).0;
        all & !Blade::full(self.m).0
    }
}

/// Basis blade `e(J)`, `J` a subset of `{1, ..., d}` stored as a bit set
/// (bit `i - 1` for index `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(u64);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    pub fn from_bits(bits: u64) -> Self {
        Blade(bits)
    }

    /// Panics if an index is outside `1..=63`.
    pub fn from_indices(indices: &[u32]) -> Self {
        Blade(indices.iter().fold(0u64, |acc, &i| {
            assert!((1..=MAX_DIM).contains(&i), "blade index {i} out of range");
            acc | (1u64 << (i - 1))
        }))
    }

    /// `{1, ..., d}`.
    pub fn full(d: u32) -> Self {
        if d == 0 {
            Blade(0)
        } else {
            Blade(u64::MAX >> (64 - d))
        }
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(&self, i: u32) -> bool {
        (1..=MAX_DIM).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    pub fn fits(&self, d: u32) -> bool {
        self.0 & !Blade::full(d).0 == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        let bits = self.0;
        (1..=MAX_DIM).filter(move |&i| bits & (1u64 << (i - 1)) != 0)
    }

    pub fn symmetric_difference(&self, other: Blade) -> Blade {
        Blade(self.0 ^ other.0)
    }

    /// Sign of the reversion `iota(e(J)) = (-1)^(|J|(|J|-1)/2) e(J)`.
    pub fn reversion_sign(&self) -> i8 {
        let g = self.grade() as u64;
        if (g * (g.saturating_sub(1)) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn grade_sign(&self) -> i8 {
        if self.grade().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sign of the conjugation `(-1)^(|J|(|J|+1)/2)`.
    pub fn conjugation_sign(&self) -> i8 {
        let g = self.grade() as u64;
        if (g * (g + 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// `e(J) * e(K) = sign * e(J xor K)`.
///
/// The sign collects one factor `-1` per pair `j in J, k in K` with `j > k`
/// (the transpositions needed to merge the two index sequences) and one
/// factor `e_i^2` per shared index.
pub fn blade_mul(j: Blade, k: Blade, sig: Signature) -> (i8, Blade) {
    let mut swaps = 0u32;
    let mut rest = k.0;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        // indices of J strictly above this index of K
        let above = if bit >= 63 { 0 } else { j.0 >> (bit + 1) };
        swaps += above.count_ones();
        rest &= rest - 1;
    }
    swaps += (j.0 & k.0 & sig.negative_mask()).count_ones();
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    (sign, Blade(j.0 ^ k.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multiplies two blades by writing out the generator word and
    /// bubble-sorting it, squaring adjacent equal generators.
    fn naive_mul(j: Blade, k: Blade, sig: Signature) -> (i8, Blade) {
        let mut word: Vec<u32> = j.indices().chain(k.indices()).collect();
        let mut sign = 1i8;
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < word.len() {
                if word[i] > word[i + 1] {
                    word.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                } else if word[i] == word[i + 1] {
                    sign *= sig.square(word[i]);
                    word.drain(i..i + 2);
                    changed = true;
                    continue;
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        (sign, Blade::from_indices(&word))
    }

    #[test]
    fn spec_blade_products() {
        let sig = Signature::new(2, 1).unwrap();
        let e1 = Blade::from_indices(&[1]);
        assert_eq!(blade_mul(e1, e1, sig), (1, Blade::EMPTY));
        let e3 = Blade::from_indices(&[3]);
        assert_eq!(blade_mul(e3, e3, sig), (-1, Blade::EMPTY));
        let sig30 = Signature::new(3, 0).unwrap();
        let r = blade_mul(
            Blade::from_indices(&[1, 2]),
            Blade::from_indices(&[2, 3]),
            sig30,
        );
        assert_eq!(r, (1, Blade::from_indices(&[1, 3])));
    }

    #[test]
    fn matches_naive_expansion_exhaustively() {
        for (m, n) in [(5, 0), (3, 2), (0, 5), (1, 4)] {
            let sig = Signature::new(m, n).unwrap();
            for a in 0..32u64 {
                for b in 0..32u64 {
                    let (j, k) = (Blade(a), Blade(b));
                    assert_eq!(blade_mul(j, k, sig), naive_mul(j, k, sig), "{j} {k}");
                }
            }
        }
    }

    #[test]
    fn display_and_limits() {
        assert_eq!(Blade::from_indices(&[3, 1]).to_string(), "e{1,3}");
        assert_eq!(Blade::EMPTY.to_string(), "e{}");
        assert!(Signature::new(0, 0).is_err());
        assert!(Signature::new(40, 24).is_err());
        assert_eq!(Blade::full(63).grade(), 63);
        assert!(Blade::from_indices(&[4]).fits(4));
        assert!(!Blade::from_indices(&[5]).fits(4));
    }
}
