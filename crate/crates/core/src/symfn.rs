//! Symmetric Boolean functions in compact form.
//!
//! A symmetric function on `n` variables is determined by its value on
//! each input weight (the simplified value vector `v`, `n + 1` bits) or
//! equivalently by its coefficients over the elementary symmetric
//! functions `σ_0, …, σ_n` (the SANF vector `λ`). The two are related by
//! a Möbius transform over the 2-adic dominance order:
//!
//! ```text
//! v(i) = Σ_{k ⪯ i} λ(k)        λ(i) = Σ_{k ⪯ i} v(k)
//! ```
//!
//! where `k ⪯ i` means every binary digit of `k` is at most the matching
//! digit of `i` (equivalently `C(i, k)` is odd).
//!
//! Text format for both vectors: `n + 1` characters of `0`/`1`, leftmost
//! is index 0.

use std::fmt;
use std::str::FromStr;

use crate::boolfn::TruthTable;
use crate::error::{Error, Result};
use crate::gf2kernel::BitVector;

/// 2-adic dominance: `a ⪯ b` iff `a AND b = a`.
#[inline]
pub fn preceq(a: usize, b: usize) -> bool {
    a & b == a
}

/// `out(i) = XOR_{k ⪯ i} input(k)` for `0 ≤ i < len`.
fn dominance_transform(input: &BitVector) -> BitVector {
    BitVector::from_bools((0..input.len()).map(|i| {
        let mut acc = false;
        let mut k = i;
        loop {
            acc ^= input.get(k);
            if k == 0 {
                break;
            }
            k = (k - 1) & i;
        }
        acc
    }))
}

fn parse_bits(s: &str) -> Result<BitVector> {
    let s = s.trim();
    if s.len() < 2 {
        return Err(Error::Parse(format!(
            "bit string {s:?} needs at least two characters (n >= 1)"
        )));
    }
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Parse(format!("invalid bit character {c:?}"))),
        })
        .collect::<Result<Vec<bool>>>()
        .map(BitVector::from_bools)
}

fn check_len(bits: &BitVector) -> Result<usize> {
    match bits.len() {
        0 | 1 => Err(Error::VariableCount {
            n: bits.len().saturating_sub(1),
            min: 1,
            max: usize::MAX,
        }),
        len => Ok(len - 1),
    }
}

macro_rules! sym_vector {
    ($name:ident, $field:ident) => {
        impl $name {
            /// Wraps `n + 1` bits; `n` is inferred from the length.
            pub fn new(bits: BitVector) -> Result<Self> {
                let n = check_len(&bits)?;
                Ok(Self { n, $field: bits })
            }

            pub fn zero(n: usize) -> Result<Self> {
                Self::new(BitVector::zeros(n + 1))
            }

            /// Bit `i` of `word` is entry `i`.
            pub fn from_word(n: usize, word: u64) -> Result<Self> {
                if n >= 64 {
                    return Err(Error::Capacity(format!(
                        "{n} variables do not fit a u64 word"
                    )));
                }
                Self::new(BitVector::from_words(n + 1, vec![word]))
            }

            /// Entry `i` as bit `i`; `None` past 63 variables.
            pub fn to_word(&self) -> Option<u64> {
                (self.n < 64).then(|| self.$field.words()[0])
            }

            pub fn from_entries(entries: &[u8]) -> Result<Self> {
                Self::new(BitVector::from_bools(entries.iter().map(|&e| e & 1 == 1)))
            }

            #[inline]
            pub fn num_vars(&self) -> usize {
                self.n
            }

            #[inline]
            pub fn get(&self, i: usize) -> bool {
                self.$field.get(i)
            }

            pub fn bits(&self) -> &BitVector {
                &self.$field
            }

            pub fn entries(&self) -> Vec<u8> {
                self.$field.iter().map(u8::from).collect()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.$field)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), self.$field)
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                Self::new(parse_bits(s)?)
            }
        }
    };
}

/// Simplified value vector: `v(i)` is the value on every weight-`i` input.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymValueVector {
    n: usize,
    v: BitVector,
}

/// Simplified ANF vector: `λ(i)` is the coefficient of `σ_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SanfVector {
    n: usize,
    lambda: BitVector,
}

sym_vector!(SymValueVector, v);
sym_vector!(SanfVector, lambda);

impl SanfVector {
    /// Largest `i` with `λ(i) = 1`; 0 for the zero vector.
    pub fn sym_degree(&self) -> usize {
        self.lambda.iter_ones().last().unwrap_or(0)
    }

    /// The sum of `σ_i` over the given indices.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut lambda = BitVector::zeros(n + 1);
        for &i in indices {
            if i > n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    min: 0,
                    max: n,
                });
            }
            lambda.toggle(i);
        }
        Self::new(lambda)
    }

    /// `λ(index)`, with indices past `n` read as 0.
    pub fn coeff(&self, index: usize) -> bool {
        index <= self.n && self.lambda.get(index)
    }

    pub fn to_value(&self) -> SymValueVector {
        sanf_to_value(self)
    }
}

impl SymValueVector {
    pub fn to_sanf(&self) -> SanfVector {
        value_to_sanf(self)
    }

    /// `f + 1`.
    pub fn complement(&self) -> Self {
        let mut v = self.v.clone();
        v.not_assign();
        Self { n: self.n, v }
    }

    /// Number of inputs where the function is 1, `Σ v(i)·C(n, i)`.
    pub fn expanded_weight(&self) -> u128 {
        let mut binom: u128 = 1;
        let mut total = 0;
        for i in 0..=self.n {
            if self.v.get(i) {
                total += binom;
            }
            binom = binom * (self.n - i) as u128 / (i + 1) as u128;
        }
        total
    }

    pub fn is_balanced(&self) -> bool {
        self.expanded_weight() == 1u128 << (self.n - 1)
    }

    pub fn expand(&self) -> Result<TruthTable> {
        expand(self)
    }
}

pub fn sanf_to_value(lambda: &SanfVector) -> SymValueVector {
    SymValueVector {
        n: lambda.n,
        v: dominance_transform(&lambda.lambda),
    }
}

pub fn value_to_sanf(v: &SymValueVector) -> SanfVector {
    SanfVector {
        n: v.n,
        lambda: dominance_transform(&v.v),
    }
}

/// Full truth table with bit `j` equal to `v(popcount(j))`.
pub fn expand(v: &SymValueVector) -> Result<TruthTable> {
    TruthTable::from_fn(v.n, |x| v.v.get(x.count_ones() as usize))
}

/// The value vector of `t`, or `None` if `t` is not symmetric.
pub fn compress(t: &TruthTable) -> Option<SymValueVector> {
    if !t.is_symmetric() {
        return None;
    }
    let n = t.num_vars();
    let v = BitVector::from_bools((0..=n).map(|i| t.get((1 << i) - 1)));
    Some(SymValueVector { n, v })
}

/// `σ_i` on `n` variables: the sum of all degree-`i` monomials.
pub fn sigma(n: usize, i: usize) -> Result<SanfVector> {
    if i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 0,
            max: n,
        });
    }
    SanfVector::from_indices(n, &[i])
}

/// `Some(v(i) = v(n - i) + 1 for all i)` for odd `n`, `None` for even `n`
/// where trivial balance is not defined.
pub fn trivial_balance(v: &SymValueVector) -> Option<bool> {
    if v.n.is_multiple_of(2) {
        return None;
    }
    Some((0..=v.n / 2).all(|i| v.get(i) != v.get(v.n - i)))
}

/// Trivial balance, reading the even-`n` case as `false`.
pub fn is_trivial_balanced(v: &SymValueVector) -> bool {
    trivial_balance(v).unwrap_or(false)
}

/// `v(i) = a` for `i ≤ ⌊n/2⌋` and `a + 1` above, for odd `n`.
///
/// Uses the floor threshold. With the ceiling threshold the function has
/// weight `2^{n-1} - C(n, ⌈n/2⌉)`, so it is unbalanced and cannot reach
/// the maximal AI for odd `n`.
pub fn majority_family(n: usize, a: bool) -> Result<SymValueVector> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenVariableCount {
            what: "majority_family",
            n,
        });
    }
    SymValueVector::new(BitVector::from_bools((0..=n).map(|i| (i > n / 2) != a)))
}
