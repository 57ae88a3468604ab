//! GF(2) Laurent series bounded above, and the evaluation map psi sending
//! a series sum a_j t^j to the element sum a_j sigma_j of a mu family.
//! Linear relations among the recentred members sigma_j correspond to
//! kernel elements of psi; the systematic kernel members are rational
//! series P_s(t) / (1 + t^{-1})^{2j} whose expansions are triangular, one
//! leading exponent per surplus index.

use crate::binom::binom_mod2;
use crate::f2poly::Poly2;
use crate::relations::{FamilyKind, RelationFamily, Resolved};
use std::collections::BTreeSet;
use std::fmt;

/// Finitely many known coefficients of a series bounded above: bits[i] is
/// the coefficient of t^{lo + i}; coefficients above the window vanish,
/// coefficients below it are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowedSeries {
    pub lo: i64,
    pub bits: Vec<bool>,
}

impl WindowedSeries {
    pub fn hi(&self) -> i64 {
        self.lo + self.bits.len() as i64 - 1
    }

    /// Coefficient of t^j; vanishes above the window, unknown below it.
    pub fn coeff(&self, j: i64) -> bool {
        assert!(j >= self.lo, "coefficient below the window");
        if j > self.hi() {
            return false;
        }
        self.bits[(j - self.lo) as usize]
    }

    pub fn leading_exponent(&self) -> Option<i64> {
        (0..self.bits.len()).rev().find(|&i| self.bits[i]).map(|i| self.lo + i as i64)
    }
}

/// A series of the form num(t) / (1 + t^{-1})^e with num a Laurent
/// polynomial over GF(2). Since 1/(1+t^{-1}) = 1 + t^{-1} + t^{-2} + ...,
/// the expansion is bounded above by the top exponent of the numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    num: BTreeSet<i64>,
    e: u32,
}

impl RationalSeries {
    pub fn zero() -> Self {
        RationalSeries { num: BTreeSet::new(), e: 0 }
    }

    pub fn monomial(a: i64) -> Self {
        RationalSeries { num: BTreeSet::from([a]), e: 0 }
    }

    /// num(t) as the GF(2) sum of the given exponents (pairs cancel).
    pub fn laurent(exponents: &[i64]) -> Self {
        let mut num = BTreeSet::new();
        for &a in exponents {
            if !num.remove(&a) {
                num.insert(a);
            }
        }
        RationalSeries { num, e: 0 }
    }

    /// The sum of all t^i with i <= floor(s/2): t^{floor(s/2)}/(1+t^{-1}).
    pub fn descending_sum(s: i64) -> Self {
        RationalSeries { num: BTreeSet::from([s.div_euclid(2)]), e: 1 }
    }

    pub fn numerator_exponents(&self) -> Vec<i64> {
        self.num.iter().copied().collect()
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Divides by (1 + t^{-1})^k.
    pub fn divide_by_one_plus_tinv(mut self, k: u32) -> Self {
        self.e += k;
        self
    }

    /// Multiplies by the Laurent polynomial with the given exponents.
    pub fn mul_laurent(&self, exponents: &[i64]) -> Self {
        let mut num = BTreeSet::new();
        for &s in exponents {
            for &a in &self.num {
                let x = a + s;
                if !num.remove(&x) {
                    num.insert(x);
                }
            }
        }
        RationalSeries { num, e: self.e }
    }

    pub fn add(&self, other: &Self) -> Self {
        // Bring both to the common denominator exponent.
        let e = self.e.max(other.e);
        let mut num = BTreeSet::new();
        let mut fold = |series: &RationalSeries| {
            let k = e - series.e;
            // (1 + t^{-1})^k has exponents -j for binomially odd j.
            for j in 0..=k as i64 {
                if !binom_mod2(k as u64, j) {
                    continue;
                }
                for &a in &series.num {
                    let x = a - j;
                    if !num.remove(&x) {
                        num.insert(x);
                    }
                }
            }
        };
        fold(self);
        fold(other);
        RationalSeries { num, e }
    }

    /// Exact coefficient of t^j: only numerator exponents a >= j
    /// contribute, each by the binomial C(a - j + e - 1, e - 1).
    pub fn coeff(&self, j: i64) -> bool {
        let mut c = false;
        for &a in self.num.range(j..) {
            let d = (a - j) as u64;
            if self.e == 0 {
                c ^= d == 0;
            } else {
                c ^= binom_mod2(d + self.e as u64 - 1, self.e as i64 - 1);
            }
        }
        c
    }

    /// All coefficients from lo up to the top numerator exponent.
    pub fn expand(&self, lo: i64) -> WindowedSeries {
        let hi = self.num.iter().next_back().copied().unwrap_or(lo - 1);
        let bits = (lo..=hi).map(|j| self.coeff(j)).collect();
        WindowedSeries { lo, bits }
    }

    pub fn leading_exponent(&self) -> Option<i64> {
        // The top numerator exponent always survives the expansion.
        self.num.iter().next_back().copied()
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .num
            .iter()
            .rev()
            .map(|&a| match a {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{a}"),
            })
            .collect();
        let num = terms.join(" + ");
        match self.e {
            0 => write!(f, "{num}"),
            1 => write!(f, "({num})/(1 + t^-1)"),
            e => write!(f, "({num})/(1 + t^-1)^{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// The window must reach down to -offset, where sigma_{-offset} is the
    /// first nonzero member.
    WindowTooNarrow { lo: i64, required: i64 },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::WindowTooNarrow { lo, required } => write!(
                f,
                "WINDOW-TOO-NARROW: window starts at {lo} but sigma members are nonzero from {required}"
            ),
        }
    }
}

/// Evaluates a windowed series against the sigma members of a mu family:
/// sum of bits[j] * sigma_j. The window must cover every index with a
/// nonzero sigma, i.e. reach down to -offset.
pub fn psi_window(w: &WindowedSeries, family: &RelationFamily) -> Result<Poly2, SeriesError> {
    assert_eq!(family.kind(), FamilyKind::Mu);
    let required = -family.sigma_offset();
    if w.lo > required {
        return Err(SeriesError::WindowTooNarrow { lo: w.lo, required });
    }
    let mut acc = Poly2::zero(family.ring());
    for j in w.lo..=w.hi() {
        if w.coeff(j) {
            acc = &acc + &family.sigma(j);
        }
    }
    Ok(acc)
}

/// Evaluates a rational series; the expansion window is chosen to cover
/// all nonzero sigma members, so this cannot fail.
pub fn psi(q: &RationalSeries, family: &RelationFamily) -> Poly2 {
    let lo = -family.sigma_offset();
    psi_window(&q.expand(lo), family).expect("window covers all members")
}

/// The systematic kernel members for reflection parameter k (the number
/// of odd blocks): rational series whose expansions are triangular with
/// leading exponents floor(k/2), floor(k/2) - 1, ..., 1. Empty for k < 2.
pub fn kernel_family(k: u64) -> Vec<RationalSeries> {
    let mut out = Vec::new();
    if k >= 3 && k % 2 == 1 {
        let m = (k / 2) as i64;
        for j in 0..m {
            // P_{k-2j}(t) / (1 + t^{-1})^{2j}, leading exponent m - j.
            out.push(
                RationalSeries::descending_sum(k as i64 - 2 * j)
                    .divide_by_one_plus_tinv(2 * j as u32),
            );
        }
    } else if k >= 2 && k.is_multiple_of(2) {
        let m = (k / 2) as i64;
        // sigma_{k/2} vanishes outright.
        out.push(RationalSeries::monomial(m));
        for j in 0..m - 1 {
            // P_{k-2j-1}(t) / (1 + t^{-1})^{2j+1}, leading exponent m-1-j.
            out.push(
                RationalSeries::descending_sum(k as i64 - 2 * j - 1)
                    .divide_by_one_plus_tinv(2 * j as u32 + 1),
            );
        }
    }
    out
}

/// The reflection kernel member t^{-s} + t^{s+k}.
pub fn reflection_member(k: u64, s: i64) -> RationalSeries {
    RationalSeries::laurent(&[-s, s + k as i64])
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    /// Leading exponents of the systematic members, strictly descending.
    pub leading_exponents: Vec<i64>,
    pub members_checked: usize,
}

/// Checks that every systematic kernel member and a sample of reflection
/// members evaluate to zero, and that the systematic members are
/// triangular: their leading exponents run down from floor(k/2) (for odd
/// k) or cover floor(k/2)..1 (for even k) without repetition.
pub fn verify_kernel(family: &RelationFamily) -> Result<KernelReport, String> {
    let k = family.odd_block_count();
    let members = kernel_family(k);
    let mut leading = Vec::new();
    for q in &members {
        let image = psi(q, family);
        if !image.is_zero() {
            return Err(format!("kernel member {q} maps to {image}"));
        }
        leading.push(q.leading_exponent().expect("nonzero member"));
    }
    for s in 0..=3 {
        let q = reflection_member(k, s);
        let image = psi(&q, family);
        if !image.is_zero() {
            return Err(format!("reflection member {q} maps to {image}"));
        }
    }
    let expected: Vec<i64> = (1..=(k / 2) as i64).rev().collect();
    if leading != expected {
        return Err(format!(
            "leading exponents {leading:?} do not cover {expected:?}"
        ));
    }
    Ok(KernelReport { leading_exponents: leading, members_checked: members.len() + 4 })
}

/// The recursion step identity: evaluating Q against a family equals the
/// sum over i >= 1 of alpha_i^(last) times the evaluation of
/// (t^{-i} + t^{i-1}) Q against the family with the last block removed.
/// Here alpha_i of a block of size n is the generator with index
/// i + floor(n/2), under the usual aliasing.
pub fn verify_recursion_step(q: &RationalSeries, family: &RelationFamily) -> Result<(), String> {
    assert_eq!(family.kind(), FamilyKind::Mu);
    let blocks = family.blocks();
    assert!(
        blocks.last().map(|&n| n % 2 == 1).unwrap_or(false),
        "recursion removes an odd block"
    );
    let last = blocks.len() - 1;
    let n_last = blocks[last] as i64;
    let smaller = crate::relations::mu_family(&blocks[..last]);

    // Map the smaller family's ring into the full ring by variable name.
    let images: Vec<Poly2> = smaller
        .ring()
        .vars()
        .iter()
        .map(|v| {
            let id = family
                .ring()
                .var_index(&v.name)
                .expect("shared block variable");
            Poly2::var(family.ring(), id)
        })
        .collect();

    let lhs = psi(q, family);
    let mut rhs = Poly2::zero(family.ring());
    let chain = family.block_chain(last);
    for i in 1..=(n_last + 1) / 2 {
        let alpha = match chain.resolve(i + n_last / 2) {
            Resolved::Zero => continue,
            Resolved::One => Poly2::one(family.ring()),
            Resolved::Var(v) => Poly2::var(family.ring(), v),
        };
        let shifted = q.mul_laurent(&[-i, i - 1]);
        let inner = psi(&shifted, &smaller)
            .substitute(&images)
            .expect("embedding into the full ring");
        rhs = &rhs + &(&alpha * &inner);
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("recursion step fails for {q}: {lhs} vs {rhs}"))
    }
}
