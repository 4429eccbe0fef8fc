//! Arbitrary Boolean functions as truth tables, their algebraic normal
//! form, annihilator spaces and algebraic immunity.
//!
//! Index convention: bit `j` of a truth table is `f(x_1, …, x_n)` where
//! `x_k` is bit `k - 1` of `j`, so `x_1` is the least significant bit.
//! ANF coefficients use the same masks: bit `m` is the coefficient of
//! the monomial `∏ x_k` over the set bits of `m`.
//!
//! Hex text format: the table read as one little-endian integer
//! (bit `j` = `f(j)`) and printed as lowercase hex, most significant digit
//! first. The rightmost digit therefore carries indices 0–3. Tables with
//! fewer than four entries (`n = 1`) still use one digit.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2kernel::{BitMatrix, BitVector};

/// Largest supported variable count.
pub const MAX_VARS: usize = 20;

fn check_vars(n: usize) -> Result<()> {
    if (1..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount {
            n,
            min: 1,
            max: MAX_VARS,
        })
    }
}

/// In-place binary Möbius transform over a table of `2^n` bits.
///
/// `a(m) = XOR_{x ⊆ m} t(x)`. The transform is its own inverse.
fn moebius_in_place(bits: &mut BitVector, n: usize) {
    const INNER: [(u32, u64); 6] = [
        (1, 0x5555_5555_5555_5555),
        (2, 0x3333_3333_3333_3333),
        (4, 0x0f0f_0f0f_0f0f_0f0f),
        (8, 0x00ff_00ff_00ff_00ff),
        (16, 0x0000_ffff_0000_ffff),
        (32, 0x0000_0000_ffff_ffff),
    ];
    let words = bits.words_mut();
    for &(shift, mask) in INNER.iter().take(n.min(6)) {
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    let mut step = 1;
    while step < words.len() {
        for i in 0..words.len() {
            if i & step != 0 {
                words[i] ^= words[i ^ step];
            }
        }
        step <<= 1;
    }
}

/// Full value table of an `n`-variable Boolean function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    bits: BitVector,
}

impl TruthTable {
    pub fn zero(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n,
            bits: BitVector::zeros(1 << n),
        })
    }

    pub fn one(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n,
            bits: BitVector::ones(1 << n),
        })
    }

    pub fn from_bits(n: usize, bits: BitVector) -> Result<Self> {
        check_vars(n)?;
        if bits.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: bits.len(),
            });
        }
        Ok(Self { n, bits })
    }

    /// Tabulates `f` over all inputs `0..2^n`.
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n,
            bits: BitVector::from_bools((0..1usize << n).map(f)),
        })
    }

    /// The single variable `x_k`, `1 ≤ k ≤ n`.
    pub fn variable(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                index: k,
                min: 1,
                max: n,
            });
        }
        Self::from_fn(n, |x| (x >> (k - 1)) & 1 == 1)
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        self.bits.get(x)
    }

    #[inline]
    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() == 1 << (self.n - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == 1 << self.n
    }

    /// Inputs where the function is 1, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    /// `f + 1`.
    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.not_assign();
        Self { n: self.n, bits }
    }

    /// Pointwise product `f · g`.
    pub fn product(&self, other: &TruthTable) -> Result<Self> {
        self.check_same_vars(other)?;
        let mut bits = self.bits.clone();
        bits.and_assign(&other.bits);
        Ok(Self { n: self.n, bits })
    }

    /// Pointwise sum `f + g`.
    pub fn sum(&self, other: &TruthTable) -> Result<Self> {
        self.check_same_vars(other)?;
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        Ok(Self { n: self.n, bits })
    }

    fn check_same_vars(&self, other: &TruthTable) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// True iff `self · g = 0` pointwise.
    pub fn is_annihilated_by(&self, g: &TruthTable) -> bool {
        self.n == g.n
            && self
                .bits
                .words()
                .iter()
                .zip(g.bits.words())
                .all(|(a, b)| a & b == 0)
    }

    pub fn anf(&self) -> AnfCoeffs {
        moebius(self)
    }

    pub fn degree(&self) -> usize {
        self.anf().degree()
    }

    /// True iff the value depends only on the Hamming weight of the input.
    pub fn is_symmetric(&self) -> bool {
        (0..1usize << self.n).all(|x| self.get(x) == self.get((1 << x.count_ones()) - 1))
    }

    /// Relabels inputs: the result at `x` is `f(y)` with `y_{perm[k]} = x_k`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Precondition(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        Self::from_fn(self.n, |x| {
            let y = perm
                .iter()
                .enumerate()
                .fold(0usize, |y, (k, &p)| y | (((x >> k) & 1) << p));
            self.get(y)
        })
    }

    pub fn to_hex(&self) -> String {
        let digits = (1usize << self.n).div_ceil(4);
        (0..digits)
            .rev()
            .map(|d| {
                let nibble = (0..4)
                    .filter(|&b| 4 * d + b < self.bits.len() && self.get(4 * d + b))
                    .fold(0u32, |acc, b| acc | 1 << b);
                char::from_digit(nibble, 16).expect("nibble < 16")
            })
            .collect()
    }

    /// Parses the hex text format.
    ///
    /// Without an explicit `n`, a string of `L ≥ 2` digits (a power of two)
    /// gives `n = log2(4L)`, and a single digit is read as `n = 2`.
    pub fn from_hex(s: &str, n: Option<usize>) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("0x").unwrap_or(s);
        let len = s.len();
        let n = match n {
            Some(n) => n,
            None if len == 1 => 2,
            None if len.is_power_of_two() => len.trailing_zeros() as usize + 2,
            None => {
                return Err(Error::Parse(format!(
                    "hex table length {len} is not a power of two"
                )))
            }
        };
        check_vars(n)?;
        let expected = (1usize << n).div_ceil(4);
        if len != expected {
            return Err(Error::Parse(format!(
                "a {n}-variable table needs {expected} hex digits, got {len}"
            )));
        }
        let mut bits = BitVector::zeros(1 << n);
        for (pos, c) in s.chars().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?}")))?;
            let d = len - 1 - pos;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let idx = 4 * d + b;
                    if idx >= bits.len() {
                        return Err(Error::Parse(format!(
                            "digit {c:?} sets bits beyond a {n}-variable table"
                        )));
                    }
                    bits.set(idx, true);
                }
            }
        }
        Ok(Self { n, bits })
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.n, self.to_hex())
    }
}

/// ANF coefficient vector, indexed by monomial mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AnfCoeffs {
    n: usize,
    coeffs: BitVector,
}

impl AnfCoeffs {
    pub fn zero(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n,
            coeffs: BitVector::zeros(1 << n),
        })
    }

    /// ANF with coefficient 1 on exactly the given monomial masks
    /// (repeated masks cancel).
    pub fn from_monomials(n: usize, masks: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut a = Self::zero(n)?;
        for m in masks {
            if m >= 1 << n {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    min: 0,
                    max: (1 << n) - 1,
                });
            }
            a.coeffs.toggle(m);
        }
        Ok(a)
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, mask: usize) -> bool {
        self.coeffs.get(mask)
    }

    pub fn coeffs(&self) -> &BitVector {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Masks with a nonzero coefficient, ascending.
    pub fn monomials(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter_ones()
    }

    /// Algebraic degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.monomials()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn to_truth_table(&self) -> TruthTable {
        let mut bits = self.coeffs.clone();
        moebius_in_place(&mut bits, self.n);
        TruthTable { n: self.n, bits }
    }
}

impl fmt::Display for AnfCoeffs {
    /// Terms in graded order, e.g. `x1*x2 + x3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<usize> = self.monomials().collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|m| {
                if m == 0 {
                    "1".to_string()
                } else {
                    (0..self.n)
                        .filter(|k| m >> k & 1 == 1)
                        .map(|k| format!("x{}", k + 1))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

impl fmt::Debug for AnfCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfCoeffs(n={}, {self})", self.n)
    }
}

pub fn moebius(t: &TruthTable) -> AnfCoeffs {
    let mut coeffs = t.bits.clone();
    moebius_in_place(&mut coeffs, t.n);
    AnfCoeffs { n: t.n, coeffs }
}

/// Masks over `n` variables of popcount at most `d`, graded by popcount
/// and ascending by value within a degree.
pub fn monomials_up_to(n: usize, d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for k in 0..=d.min(n) {
        out.extend(masks_of_weight(n, k));
    }
    out
}

fn masks_of_weight(n: usize, k: usize) -> impl Iterator<Item = usize> {
    let limit = 1usize << n;
    let mut next = if k > n { None } else { Some((1usize << k) - 1) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < limit).then_some(succ)
        };
        Some(cur)
    })
}

/// Which of `f` and `f + 1` an annihilator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Annihilates `f`.
    Function,
    /// Annihilates `f + 1`.
    Complement,
}

impl Side {
    /// The side annihilated by a function whose support lies inside
    /// `{x : f(x) = value}`.
    pub fn for_support_value(value: bool) -> Self {
        if value {
            Side::Complement
        } else {
            Side::Function
        }
    }

    pub fn apply(self, f: &TruthTable) -> TruthTable {
        match self {
            Side::Function => f.clone(),
            Side::Complement => f.complement(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Function => "f",
            Side::Complement => "f+1",
        })
    }
}

/// All annihilators of degree at most `degree_bound`, as coefficient
/// vectors over `monomials`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorSpace {
    pub n: usize,
    pub degree_bound: usize,
    pub monomials: Vec<usize>,
    pub basis: Vec<BitVector>,
}

impl AnnihilatorSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Maps a coefficient vector over `monomials` back to an ANF.
    pub fn to_anf(&self, coords: &BitVector) -> AnfCoeffs {
        AnfCoeffs::from_monomials(self.n, coords.iter_ones().map(|k| self.monomials[k]))
            .expect("monomials fit the variable count")
    }

    pub fn basis_anfs(&self) -> impl Iterator<Item = AnfCoeffs> + '_ {
        self.basis.iter().map(|v| self.to_anf(v))
    }
}

/// Annihilators of `f` of degree at most `d`.
///
/// Solves the evaluation system: one row per point of `supp(f)`, one
/// column per monomial, entry 1 iff the monomial is 1 at the point.
pub fn annihilator_space(f: &TruthTable, d: usize) -> Result<AnnihilatorSpace> {
    if d > f.n {
        return Err(Error::IndexOutOfRange {
            index: d,
            min: 0,
            max: f.n,
        });
    }
    let monomials = monomials_up_to(f.n, d);
    let support: Vec<usize> = f.support().collect();
    let mut m = BitMatrix::zeros(support.len(), monomials.len());
    for (r, &x) in support.iter().enumerate() {
        for (c, &mono) in monomials.iter().enumerate() {
            if x & mono == mono {
                m.set(r, c, true);
            }
        }
    }
    Ok(AnnihilatorSpace {
        n: f.n,
        degree_bound: d,
        basis: m.nullspace_basis(),
        monomials,
    })
}

/// Result of an algebraic immunity computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AiWitness {
    pub ai: usize,
    pub side: Side,
    /// A nonzero annihilator of degree exactly `ai` of the `side` function.
    pub witness: AnfCoeffs,
}

/// Column-incremental elimination over the evaluation system of one
/// side. Monomial columns are inserted in graded order; the first column
/// that reduces to zero yields an annihilator of that column's degree.
struct IncrementalAnnihilator {
    support: Vec<usize>,
    total_columns: usize,
    inserted: usize,
    /// Basis vector whose lowest set row is the index.
    by_pivot: Vec<Option<(BitVector, BitVector)>>,
}

impl IncrementalAnnihilator {
    fn new(f: &TruthTable, total_columns: usize) -> Self {
        let support: Vec<usize> = f.support().collect();
        let rows = support.len();
        Self {
            support,
            total_columns,
            inserted: 0,
            by_pivot: vec![None; rows],
        }
    }

    /// Returns the dependency (over inserted columns) if `mono` is in the
    /// span of the earlier columns.
    fn insert(&mut self, mono: usize) -> Option<BitVector> {
        let mut eval = BitVector::from_bools(self.support.iter().map(|&x| x & mono == mono));
        let mut combo = BitVector::unit(self.total_columns, self.inserted);
        self.inserted += 1;
        while let Some(p) = eval.first_one() {
            match &self.by_pivot[p] {
                Some((e, c)) => {
                    eval.xor_assign(e);
                    combo.xor_assign(c);
                }
                None => {
                    self.by_pivot[p] = Some((eval, combo));
                    return None;
                }
            }
        }
        Some(combo)
    }
}

/// Algebraic immunity of `f` with a minimal-degree witness.
///
/// Degrees are tried upward from 0. Within a degree the side with the
/// smaller support goes first (ties: `f` first). Constant functions have
/// AI 0, witnessed by `g = 1` on their zero side.
///
/// # Panics
/// Panics if no annihilator is found up to `⌈n/2⌉`, which would
/// contradict the general upper bound on algebraic immunity.
pub fn algebraic_immunity(f: &TruthTable) -> AiWitness {
    let bound = f.n.div_ceil(2);
    let monomials = monomials_up_to(f.n, bound);
    let complement = f.complement();
    let mut sides = [
        (
            Side::Function,
            IncrementalAnnihilator::new(f, monomials.len()),
        ),
        (
            Side::Complement,
            IncrementalAnnihilator::new(&complement, monomials.len()),
        ),
    ];
    if sides[1].1.support.len() < sides[0].1.support.len() {
        sides.swap(0, 1);
    }
    let mut start = 0;
    for d in 0..=bound {
        let end = start + masks_of_weight(f.n, d).count();
        for (side, engine) in sides.iter_mut() {
            for &mono in &monomials[start..end] {
                if let Some(combo) = engine.insert(mono) {
                    let witness =
                        AnfCoeffs::from_monomials(f.n, combo.iter_ones().map(|k| monomials[k]))
                            .expect("monomials fit the variable count");
                    return AiWitness {
                        ai: d,
                        side: *side,
                        witness,
                    };
                }
            }
        }
        start = end;
    }
    panic!("no annihilator of degree <= {bound} for {f:?}; AI upper bound violated");
}

/// Exhaustive oracle: does some nonzero `g` with `deg(g) ≤ d` satisfy
/// `f · g = 0`?
///
/// Walks every nonzero coefficient vector in Gray-code order, so each
/// step toggles one monomial's evaluation. Refuses when there are more
/// than 20 monomials of degree at most `d`.
pub fn brute_force_annihilator_exists(f: &TruthTable, d: usize) -> Result<bool> {
    const MAX_MONOMIALS: usize = 20;
    let monomials = monomials_up_to(f.n, d);
    if monomials.len() > MAX_MONOMIALS {
        return Err(Error::Capacity(format!(
            "{} monomials of degree <= {d} on {} variables exceeds the oracle limit of {MAX_MONOMIALS}",
            monomials.len(),
            f.n
        )));
    }
    let support: Vec<usize> = f.support().collect();
    let columns: Vec<BitVector> = monomials
        .iter()
        .map(|&m| BitVector::from_bools(support.iter().map(|&x| x & m == m)))
        .collect();
    let mut g_on_support = BitVector::zeros(support.len());
    for step in 1u64..1 << monomials.len() {
        g_on_support.xor_assign(&columns[step.trailing_zeros() as usize]);
        if g_on_support.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}
