//! Explicit low-degree annihilators for symmetric functions.
//!
//! * [`lemma4_solve`] builds the linear system for a nonzero symmetric `g`
//!   on `2i + 1` variables with `deg(g) ≤ i` that vanishes on weight 0 and
//!   on weights `i+1 ..= 2i`.
//! * [`gap_annihilator`] multiplies such a `g` by a product of pairwise
//!   sums on the remaining variables, giving an `n`-variable function of
//!   degree at most `⌊n/2⌋` supported on a narrow band of weights.
//! * [`refute_max_ai`] uses that product to certify that a trivially
//!   balanced non-majority function has AI below `⌈n/2⌉`.
//! * [`theorem3_condition`] and [`theorem3_annihilator`] give a SANF-level
//!   necessary condition for maximal AI, and the low-degree annihilator
//!   that exists when it fails.

use crate::boolfn::{Side, TruthTable};
use crate::error::{Error, Result};
use crate::gf2kernel::{lex_min_nonzero, BitMatrix, BitVector};
use crate::symfn::{self, preceq, SanfVector, SymValueVector};

/// Constraint system over the unknowns `λ(0), …, λ(i)` of a symmetric
/// function on `2i + 1` variables.
#[derive(Clone, Debug)]
pub struct Lemma4System {
    pub i: usize,
    /// Row `r` encodes `v(w_r) = 0` for the weights in [`Self::constrained_weights`].
    pub matrix: BitMatrix,
    /// Nullspace basis, one vector of length `i + 1` per free column.
    pub solutions: Vec<BitVector>,
}

impl Lemma4System {
    pub fn num_vars(&self) -> usize {
        2 * self.i + 1
    }

    /// `[0, i+1, i+2, …, 2i]`.
    pub fn constrained_weights(&self) -> Vec<usize> {
        std::iter::once(0).chain(self.i + 1..=2 * self.i).collect()
    }

    pub fn nullity(&self) -> usize {
        self.solutions.len()
    }

    /// Pads a solution over `λ(0..=i)` to a SANF vector on `2i + 1`
    /// variables.
    pub fn to_sanf(&self, solution: &BitVector) -> SanfVector {
        let mut lambda = BitVector::zeros(self.num_vars() + 1);
        for k in solution.iter_ones() {
            lambda.set(k, true);
        }
        SanfVector::new(lambda).expect("2i + 1 >= 3 variables")
    }

    pub fn basis_sanfs(&self) -> Vec<SanfVector> {
        self.solutions.iter().map(|s| self.to_sanf(s)).collect()
    }

    /// Lexicographically smallest nonzero solution, comparing `λ(0)`
    /// first.
    pub fn canonical(&self) -> SanfVector {
        let best = lex_min_nonzero(&self.solutions).expect("system always has a nonzero solution");
        self.to_sanf(&best)
    }

    /// Whether `lambda` lies in the solution space: degree at most `i`
    /// and every constrained row satisfied.
    pub fn contains(&self, lambda: &SanfVector) -> bool {
        if lambda.num_vars() != self.num_vars()
            || (self.i + 1..=self.num_vars()).any(|k| lambda.get(k))
        {
            return false;
        }
        let x = BitVector::from_bools((0..=self.i).map(|k| lambda.get(k)));
        self.matrix
            .mul_vec(&x)
            .expect("unknown count matches columns")
            .is_zero()
    }
}

/// Builds and solves the constraint system for parameter `i ≥ 1`.
///
/// All `i + 1` rows are kept; the rank deficiency (weight `2^{t+1}` with
/// `2^t ≤ i < 2^{t+1}` repeats the weight-0 row) is found by elimination.
pub fn lemma4_solve(i: usize) -> Result<Lemma4System> {
    if i < 1 {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: usize::MAX,
        });
    }
    let weights: Vec<usize> = std::iter::once(0).chain(i + 1..=2 * i).collect();
    let mut matrix = BitMatrix::zeros(weights.len(), i + 1);
    for (r, &w) in weights.iter().enumerate() {
        for k in 0..=i {
            if preceq(k, w) {
                matrix.set(r, k, true);
            }
        }
    }
    let solutions = matrix.nullspace_basis();
    debug_assert!(!solutions.is_empty());
    Ok(Lemma4System {
        i,
        matrix,
        solutions,
    })
}

/// Product annihilator `g · h` on `n` variables.
#[derive(Clone, Debug)]
pub struct GapAnnihilator {
    pub n: usize,
    pub i: usize,
    /// Value vector of `g` on `x_1 … x_{2i+1}`.
    pub g_part: SymValueVector,
    pub product: TruthTable,
}

impl GapAnnihilator {
    /// Distinct input weights on which the product is 1, ascending.
    pub fn support_weights(&self) -> Vec<usize> {
        support_weights(&self.product)
    }

    /// Weights allowed by construction: `⌊n/2⌋-i+1 ..= ⌊n/2⌋` and
    /// `⌊n/2⌋+i+1`.
    pub fn allowed_weights(&self) -> Vec<usize> {
        let m = self.n / 2;
        (m + 1 - self.i..=m)
            .chain(std::iter::once(m + self.i + 1))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.product.degree()
    }
}

pub fn support_weights(t: &TruthTable) -> Vec<usize> {
    let mut seen = vec![false; t.num_vars() + 1];
    for x in t.support() {
        seen[x.count_ones() as usize] = true;
    }
    (0..seen.len()).filter(|&w| seen[w]).collect()
}

/// `g(x_1..x_{2i+1}) · (x_{2i+2} + x_{2i+3}) ⋯ (x_{n-1} + x_n)` with `g`
/// the canonical solution of [`lemma4_solve`].
pub fn gap_annihilator(n: usize, i: usize) -> Result<GapAnnihilator> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenVariableCount {
            what: "gap_annihilator",
            n,
        });
    }
    if i < 1 || i > n / 2 {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n / 2,
        });
    }
    let g_part = lemma4_solve(i)?.canonical().to_value();
    let low = 2 * i + 1;
    let low_mask = (1usize << low) - 1;
    let pairs = (n - low) / 2;
    let product = TruthTable::from_fn(n, |x| {
        let g = g_part.get((x & low_mask).count_ones() as usize);
        let rest = x >> low;
        g && (0..pairs).all(|p| (rest >> (2 * p) & 1) != (rest >> (2 * p + 1) & 1))
    })?;
    Ok(GapAnnihilator {
        n,
        i,
        g_part,
        product,
    })
}

/// Low-degree annihilator certifying that a trivially balanced function
/// does not reach maximal AI.
#[derive(Clone, Debug)]
pub struct Refutation {
    pub annihilator: TruthTable,
    pub side: Side,
    /// Run length `i` used for the gap construction.
    pub gap: usize,
}

/// For a trivially balanced `v` on odd `n`: `None` if `v` is one of the
/// two majority vectors, otherwise an annihilator of `f` or `f + 1` of
/// degree at most `⌊n/2⌋`.
///
/// Let `m = ⌊n/2⌋` and `i` be the length of the longest run
/// `v(m-i+1) = … = v(m)`. Trivial balance then gives
/// `v(m+i+1) = v(m)`, so the gap product for `i` is supported where
/// `f` equals `v(m)`.
pub fn refute_max_ai(v: &SymValueVector) -> Result<Option<Refutation>> {
    let n = v.num_vars();
    match symfn::trivial_balance(v) {
        None => {
            return Err(Error::EvenVariableCount {
                what: "refute_max_ai",
                n,
            })
        }
        Some(false) => {
            return Err(Error::Precondition(format!(
                "{v} is not trivially balanced"
            )));
        }
        Some(true) => {}
    }
    let m = n / 2;
    let shared = v.get(m);
    let mut run = 1;
    while run <= m && v.get(m - run) == shared {
        run += 1;
    }
    if run == m + 1 {
        return Ok(None);
    }
    let gap = gap_annihilator(n, run)?;
    debug_assert_eq!(v.get(m + run + 1), shared);
    Ok(Some(Refutation {
        annihilator: gap.product,
        side: Side::for_support_value(shared),
        gap: run,
    }))
}

/// The powers of two in the binary expansion of `a`, ascending.
///
/// `σ_a` equals the product of `σ_p` over these `p`.
pub fn sigma_factorize(n: usize, a: usize) -> Result<Vec<usize>> {
    if a == 0 || a > n {
        return Err(Error::IndexOutOfRange {
            index: a,
            min: 1,
            max: n,
        });
    }
    Ok((0..usize::BITS)
        .map(|b| 1usize << b)
        .filter(|p| a & p != 0)
        .collect())
}

/// `t` with `2^t ≤ n < 2^{t+1}`.
fn log2_floor(n: usize) -> u32 {
    usize::BITS - 1 - n.leading_zeros()
}

fn check_theorem3_vars(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::VariableCount {
            n,
            min: 2,
            max: usize::MAX,
        });
    }
    Ok(())
}

/// With `2^t ≤ n < 2^{t+1}`: at least one of `λ(2^{t-1})`, `λ(2^t)`,
/// `λ(2^t + 2^{t-1})` is 1. Indices past `n` count as 0.
pub fn theorem3_condition(lambda: &SanfVector) -> Result<bool> {
    let n = lambda.num_vars();
    check_theorem3_vars(n)?;
    let t = log2_floor(n);
    let (half, full) = (1usize << (t - 1), 1usize << t);
    Ok([half, full, full + half]
        .into_iter()
        .any(|k| lambda.coeff(k)))
}

/// `∏_{j=0}^{t-2} (σ_{2^j} + 1)`, of degree `2^{t-1} - 1`.
///
/// When [`theorem3_condition`] fails for `f`, every remaining term
/// `σ_a` with `a > 0` has its lowest set bit below `2^{t-1}` and is
/// killed by the matching factor, so this annihilates `f` (if
/// `λ(0) = 0`) or `f + 1` (if `λ(0) = 1`).
pub fn theorem3_annihilator(n: usize) -> Result<TruthTable> {
    check_theorem3_vars(n)?;
    let t = log2_floor(n);
    let mut g = TruthTable::one(n)?;
    for j in 0..t.saturating_sub(1) {
        let factor = symfn::sigma(n, 1 << j)?.to_value().complement().expand()?;
        g = g.product(&factor)?;
    }
    Ok(g)
}

/// The side [`theorem3_annihilator`] kills for a function failing the
/// condition.
pub fn theorem3_side(lambda: &SanfVector) -> Side {
    if lambda.get(0) {
        Side::Complement
    } else {
        Side::Function
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::algebraic_immunity;
    use crate::symfn::{majority_family, sigma};

    fn l(s: &str) -> SanfVector {
        s.parse().unwrap()
    }

    fn v(s: &str) -> SymValueVector {
        s.parse().unwrap()
    }

    #[test]
    fn lemma4_contains_worked_examples() {
        let cases = [
            (1, "0100"),
            (2, "011000"),
            (3, "00010000"),
            (4, "0111100000"),
            (5, "000101000000"),
        ];
        for (i, sanf) in cases {
            let sys = lemma4_solve(i).unwrap();
            assert!(sys.contains(&l(sanf)), "i = {i}");
        }
        let sys = lemma4_solve(1).unwrap();
        assert!(sys
            .solutions
            .contains(&BitVector::from_bools([false, true])));
    }

    #[test]
    fn lemma4_row_structure() {
        let sys = lemma4_solve(3).unwrap();
        assert_eq!(sys.constrained_weights(), vec![0, 4, 5, 6]);
        for (r, w) in sys.constrained_weights().into_iter().enumerate() {
            for k in 0..=3 {
                assert_eq!(sys.matrix.get(r, k), preceq(k, w));
            }
        }
    }

    #[test]
    fn lemma4_rejects_zero() {
        assert!(lemma4_solve(0).is_err());
    }

    #[test]
    fn lemma4_canonical_is_lex_min() {
        for i in 1..=8 {
            let sys = lemma4_solve(i).unwrap();
            let canon = sys.canonical();
            assert!(sys.contains(&canon));
            // brute force over all 2^{i+1} candidate λ(0..=i)
            let best = (1u64..1 << (i + 1))
                .map(|w| {
                    let mut lam = BitVector::zeros(2 * i + 2);
                    for k in 0..=i {
                        lam.set(k, w >> k & 1 == 1);
                    }
                    SanfVector::new(lam).unwrap()
                })
                .filter(|lam| sys.contains(lam))
                .min_by_key(|lam| lam.entries())
                .unwrap();
            assert_eq!(canon, best, "i = {i}");
        }
    }

    #[test]
    fn gap_annihilator_examples() {
        let g = gap_annihilator(5, 1).unwrap();
        assert!(g.support_weights().iter().all(|w| [2, 4].contains(w)));
        assert!(g.degree() <= 2);
        assert!(!g.product.is_zero());

        let g = gap_annihilator(7, 2).unwrap();
        assert!(g.support_weights().iter().all(|w| [2, 3, 6].contains(w)));
        assert!(g.degree() <= 3);

        for n in [3usize, 5, 7, 9] {
            let g = gap_annihilator(n, n / 2).unwrap();
            assert_eq!(g.product, g.g_part.expand().unwrap());
        }

        assert!(gap_annihilator(6, 1).is_err());
        assert!(gap_annihilator(7, 0).is_err());
        assert!(gap_annihilator(7, 4).is_err());
    }

    #[test]
    fn refute_examples() {
        assert!(refute_max_ai(&majority_family(7, false).unwrap())
            .unwrap()
            .is_none());
        assert!(refute_max_ai(&majority_family(7, true).unwrap())
            .unwrap()
            .is_none());

        let alt = v("010101");
        let r = refute_max_ai(&alt).unwrap().unwrap();
        assert!(r.annihilator.degree() <= 2);
        let f = alt.expand().unwrap();
        assert!(r.side.apply(&f).is_annihilated_by(&r.annihilator));
        assert!(algebraic_immunity(&f).ai < 3);

        let g1 = v("0101");
        let r = refute_max_ai(&g1).unwrap().unwrap();
        assert!(r.annihilator.degree() <= 1);
        assert!(r
            .side
            .apply(&g1.expand().unwrap())
            .is_annihilated_by(&r.annihilator));

        assert!(refute_max_ai(&v("0001")).is_err());
        assert!(refute_max_ai(&v("001")).is_err());
    }

    #[test]
    fn sigma_factorize_examples() {
        assert_eq!(sigma_factorize(5, 3).unwrap(), vec![1, 2]);
        let s = |a| sigma(5, a).unwrap().to_value().expand().unwrap();
        assert_eq!(s(1).product(&s(2)).unwrap(), s(3));
        assert_eq!(sigma_factorize(12, 8).unwrap(), vec![8]);
        assert_eq!(sigma_factorize(12, 11).unwrap(), vec![1, 2, 8]);
        assert!(sigma_factorize(5, 0).is_err());
        assert!(sigma_factorize(5, 6).is_err());
    }

    #[test]
    fn theorem3_condition_examples() {
        let maj = majority_family(5, false).unwrap().to_sanf();
        assert_eq!(maj, l("000110"));
        assert!(theorem3_condition(&maj).unwrap());
        assert!(!theorem3_condition(&sigma(5, 1).unwrap()).unwrap());
        assert!(theorem3_condition(&l("01")).is_err());
    }

    #[test]
    fn theorem3_annihilator_examples() {
        let g5 = theorem3_annihilator(5).unwrap();
        assert_eq!(
            g5,
            sigma(5, 1)
                .unwrap()
                .to_value()
                .complement()
                .expand()
                .unwrap()
        );
        assert_eq!(g5.degree(), 1);
        let s1 = sigma(5, 1).unwrap().to_value().expand().unwrap();
        assert!(s1.is_annihilated_by(&g5));

        assert_eq!(
            theorem3_annihilator(3).unwrap(),
            TruthTable::one(3).unwrap()
        );
        assert_eq!(theorem3_annihilator(2).unwrap().degree(), 0);
        assert_eq!(theorem3_annihilator(9).unwrap().degree(), 3);
        assert!(theorem3_annihilator(1).is_err());
    }
}
