//! The three families of GF(2) relations cutting out the degree-0 part of
//! the Witt ring: the symmetric family mu over a tuple of blocks, and the
//! two spin-augmented families nu (even mirror) and xi (odd mirror).
//!
//! Canonical variables: each block of size n contributes b1_p..b{n/2}_p of
//! weights 1..floor(n/2); indices outside the canonical range alias by
//! b_i = b_{n-i}, b_0 = 1, and vanish out of [0, n]. The spin chain
//! contributes a1..am with the analogous folding at 2m (nu) or 2m+1 (xi).
//!
//! Regularity of the basis subfamily is certified by leading forms after
//! the staged elimination of odd-index spin generators; surplus members
//! reduce to combinations of the basis with scalar or block-subring
//! coefficients, always verified by substitution.

use crate::binom::{binom_mod2, multinomial};
use crate::f2poly::{
    groebner, is_regular_sequence, solve_linear_combination, CoeffMode, Poly2, QuotientDim,
    RegularityMethod, RegularityVerdict, Ring, SolveOutcome, Variable,
};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Mu,
    Nu,
    Xi,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Mu => "mu",
            FamilyKind::Nu => "nu",
            FamilyKind::Xi => "xi",
        }
    }
}

/// A chain of generators indexed 1..=len with aliasing rules: index 0 is
/// the unit, indices outside [0, cap] vanish, and when `folded` an index i
/// aliases to cap - i.
#[derive(Clone, Debug)]
pub struct VarChain {
    pub cap: i64,
    pub vars: Vec<usize>,
    pub folded: bool,
}

pub enum Resolved {
    Zero,
    One,
    Var(usize),
}

impl VarChain {
    pub fn folded(cap: i64, vars: Vec<usize>) -> Self {
        assert_eq!(vars.len() as i64, cap / 2, "folded chain has cap/2 generators");
        VarChain { cap, vars, folded: true }
    }

    pub fn plain(cap: i64, vars: Vec<usize>) -> Self {
        assert_eq!(vars.len() as i64, cap, "plain chain has cap generators");
        VarChain { cap, vars, folded: false }
    }

    pub fn resolve(&self, i: i64) -> Resolved {
        if i < 0 || i > self.cap {
            return Resolved::Zero;
        }
        let idx = if self.folded { i.min(self.cap - i) } else { i };
        if idx == 0 {
            Resolved::One
        } else {
            Resolved::Var(self.vars[idx as usize - 1])
        }
    }
}

/// The degree-`m` component of the product over all chains of their total
/// generator sums: the sum over compositions m = a_1 + ... + a_l of the
/// products chain_1[a_1] * ... * chain_l[a_l].
pub fn composition_sum(ring: &Arc<Ring>, chains: &[VarChain], m: i64) -> Poly2 {
    let mut monomials = Vec::new();
    let mut exps = vec![0u16; ring.nvars()];
    fn rec(
        chains: &[VarChain],
        idx: usize,
        remaining: i64,
        exps: &mut Vec<u16>,
        out: &mut Vec<crate::f2poly::Monomial>,
    ) {
        if idx == chains.len() {
            if remaining == 0 {
                out.push(crate::f2poly::Monomial(exps.clone()));
            }
            return;
        }
        let cap = chains[idx].cap.min(remaining);
        for a in 0..=cap.max(-1) {
            match chains[idx].resolve(a) {
                Resolved::Zero => {}
                Resolved::One => rec(chains, idx + 1, remaining - a, exps, out),
                Resolved::Var(v) => {
                    exps[v] += 1;
                    rec(chains, idx + 1, remaining - a, exps, out);
                    exps[v] -= 1;
                }
            }
        }
    }
    if m < 0 {
        return Poly2::zero(ring);
    }
    rec(chains, 0, m, &mut exps, &mut monomials);
    Poly2::from_monomials(ring, monomials)
}

/// Member k of a spin-augmented family: the convolution
/// `sum_i alpha[k - 2i] * mu_i(blocks)` plus a constant term.
pub fn spin_convolution(
    ring: &Arc<Ring>,
    alpha: &VarChain,
    blocks: &[VarChain],
    k: i64,
    constant: bool,
) -> Poly2 {
    let mut acc = Poly2::constant(ring, constant);
    for i in 0..=k / 2 {
        let mu_i = composition_sum(ring, blocks, i);
        if mu_i.is_zero() {
            continue;
        }
        match alpha.resolve(k - 2 * i) {
            Resolved::Zero => {}
            Resolved::One => acc = &acc + &mu_i,
            Resolved::Var(v) => {
                let a = Poly2::var(ring, v);
                acc = &acc + &(&a * &mu_i);
            }
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct RelationFamily {
    kind: FamilyKind,
    /// Spin parameter; zero for the mu family.
    m: u64,
    /// Block sizes in ring order (for mu: even blocks first).
    blocks: Vec<u64>,
    /// Block sizes as passed by the caller.
    original_blocks: Vec<u64>,
    ring: Arc<Ring>,
    alpha: Option<VarChain>,
    beta: Vec<VarChain>,
    members: Vec<Poly2>,
    rank_constants: Vec<bool>,
    basis: Vec<usize>,
}

/// Builds the canonical ring for a family: spin generators a1..am of
/// weight i first, then b{i}_{p} of weight i per block.
fn family_ring(m_vars: u64, blocks: &[u64]) -> (Arc<Ring>, Vec<usize>, Vec<Vec<usize>>) {
    let mut vars = Vec::new();
    let mut alpha_ids = Vec::new();
    for i in 1..=m_vars {
        alpha_ids.push(vars.len());
        vars.push(Variable::new(format!("a{i}"), i as u32));
    }
    let mut beta_ids = Vec::new();
    for (p, &n) in blocks.iter().enumerate() {
        let mut ids = Vec::new();
        for i in 1..=n / 2 {
            ids.push(vars.len());
            vars.push(Variable::new(format!("b{}_{}", i, p + 1), i as u32));
        }
        beta_ids.push(ids);
    }
    (Ring::new(vars), alpha_ids, beta_ids)
}

/// The mu family on the given blocks: members mu_0..mu_{N/2} where
/// N = sum of block sizes, basis indices 1..sum(floor(n_p/2)). Blocks are
/// reordered even-first internally; members do not depend on the order.
pub fn mu_family(blocks: &[u64]) -> RelationFamily {
    assert!(!blocks.is_empty(), "at least one block");
    assert!(blocks.iter().all(|&n| n >= 1), "blocks are positive");
    let original: Vec<u64> = blocks.to_vec();
    let mut ordered = original.clone();
    ordered.sort_by_key(|&n| (n % 2, n));
    let n_total: u64 = ordered.iter().sum();
    let m_beta: u64 = ordered.iter().map(|&n| n / 2).sum();

    let (ring, _, beta_ids) = family_ring(0, &ordered);
    let beta: Vec<VarChain> = ordered
        .iter()
        .zip(beta_ids)
        .map(|(&n, ids)| VarChain::folded(n as i64, ids))
        .collect();

    let mut members = Vec::new();
    let mut rank_constants = Vec::new();
    for k in 0..=n_total / 2 {
        let p = composition_sum(&ring, &beta, k as i64);
        let c = binom_mod2(n_total, k as i64);
        // The rank homomorphism sends b{i}_{p} to C(n_p, i) mod 2; each
        // member must evaluate to its binomial constant.
        debug_assert_eq!(p.evaluate_bits(&rank_bits(&ring, None, &ordered)), c);
        members.push(p);
        rank_constants.push(c);
    }
    RelationFamily {
        kind: FamilyKind::Mu,
        m: 0,
        blocks: ordered,
        original_blocks: original,
        ring,
        alpha: None,
        beta,
        members,
        rank_constants,
        basis: (1..=m_beta as usize).collect(),
    }
}

fn spin_family(kind: FamilyKind, m: u64, blocks: &[u64]) -> RelationFamily {
    assert!(blocks.iter().all(|&n| n >= 1), "blocks are positive");
    let original: Vec<u64> = blocks.to_vec();
    let n_total: u64 = m + original.iter().copied().sum::<u64>();
    let m_beta: u64 = original.iter().map(|&n| n / 2).sum();
    let mirror = match kind {
        FamilyKind::Nu => 2 * m,
        FamilyKind::Xi => 2 * m + 1,
        FamilyKind::Mu => unreachable!(),
    };

    let (ring, alpha_ids, beta_ids) = family_ring(m, &original);
    let alpha = VarChain::folded(mirror as i64, alpha_ids);
    let beta: Vec<VarChain> = original
        .iter()
        .zip(beta_ids)
        .map(|(&n, ids)| VarChain::folded(n as i64, ids))
        .collect();

    let binom_top = match kind {
        FamilyKind::Nu => 2 * n_total,
        FamilyKind::Xi => 2 * n_total + 1,
        FamilyKind::Mu => unreachable!(),
    };
    let mut members = Vec::new();
    for k in 1..=n_total {
        let p = spin_convolution(&ring, &alpha, &beta, k as i64, binom_mod2(binom_top, k as i64));
        // Every member has rank zero.
        debug_assert!(!p.evaluate_bits(&rank_bits(&ring, Some((mirror, m)), &original)));
        members.push(p);
    }

    let even_top = 2 * (m / 2 + m_beta);
    let mut basis: Vec<usize> = (1..=m as usize).step_by(2).collect();
    basis.extend((2..=even_top as usize).step_by(2));
    basis.sort_unstable();

    RelationFamily {
        kind,
        m,
        blocks: original.clone(),
        original_blocks: original,
        ring,
        alpha: Some(alpha),
        beta,
        members,
        rank_constants: vec![false; n_total as usize],
        basis,
    }
}

/// The nu family: spin chain folded at 2m, members nu_1..nu_n with
/// constants C(2n, k), n = m + sum(blocks).
pub fn nu_family(m: u64, blocks: &[u64]) -> RelationFamily {
    spin_family(FamilyKind::Nu, m, blocks)
}

/// The xi family: spin chain folded at 2m+1, members xi_1..xi_n with
/// constants C(2n+1, k).
pub fn xi_family(m: u64, blocks: &[u64]) -> RelationFamily {
    spin_family(FamilyKind::Xi, m, blocks)
}

/// Rank bits (the GF(2) image of each variable under the rank
/// homomorphism) for a family ring laid out by `family_ring`.
fn rank_bits(ring: &Arc<Ring>, alpha: Option<(u64, u64)>, blocks: &[u64]) -> Vec<bool> {
    let mut bits = Vec::with_capacity(ring.nvars());
    if let Some((mirror, m)) = alpha {
        for i in 1..=m {
            bits.push(binom_mod2(mirror, i as i64));
        }
    }
    for &n in blocks {
        for i in 1..=n / 2 {
            bits.push(binom_mod2(n, i as i64));
        }
    }
    assert_eq!(bits.len(), ring.nvars());
    bits
}

#[derive(Clone, Debug)]
pub struct FamilyRegularity {
    pub verdict: RegularityVerdict,
    /// Whether odd spin generators were eliminated before the check.
    pub staged: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    /// Family index of the reduced member.
    pub index: usize,
    /// `(basis index, coefficient)` pairs with nonzero coefficient.
    pub combination: Vec<(usize, Poly2)>,
}

impl RelationFamily {
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn spin_param(&self) -> u64 {
        self.m
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn original_blocks(&self) -> &[u64] {
        &self.original_blocks
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn index_offset(&self) -> usize {
        match self.kind {
            FamilyKind::Mu => 0,
            _ => 1,
        }
    }

    pub fn member_indices(&self) -> std::ops::Range<usize> {
        let o = self.index_offset();
        o..o + self.members.len()
    }

    pub fn member(&self, index: usize) -> &Poly2 {
        &self.members[index - self.index_offset()]
    }

    pub fn rank_constant(&self, index: usize) -> bool {
        self.rank_constants[index - self.index_offset()]
    }

    /// The member with its binomial constant folded in; for nu/xi the
    /// constant is already part of the member.
    pub fn reduced_member(&self, index: usize) -> Poly2 {
        let p = self.member(index);
        match self.kind {
            FamilyKind::Mu if self.rank_constant(index) => p + &Poly2::one(&self.ring),
            _ => p.clone(),
        }
    }

    pub fn basis_set(&self) -> &[usize] {
        &self.basis
    }

    pub fn surplus_indices(&self) -> Vec<usize> {
        self.member_indices()
            .filter(|i| !self.basis.contains(i))
            .collect()
    }

    pub fn beta_var_ids(&self) -> Vec<usize> {
        self.beta.iter().flat_map(|c| c.vars.iter().copied()).collect()
    }

    pub fn block_chain(&self, p: usize) -> &VarChain {
        &self.beta[p]
    }

    fn basis_members(&self) -> Vec<Poly2> {
        self.basis.iter().map(|&i| self.reduced_member(i)).collect()
    }

    /// The expected quotient dimension: the multinomial coefficient of the
    /// halved parameters.
    pub fn expected_dimension(&self) -> u64 {
        let mut parts: Vec<u64> = self.blocks.iter().map(|&n| n / 2).collect();
        if self.kind != FamilyKind::Mu {
            parts.push(self.m / 2);
        }
        multinomial(&parts)
    }

    /// Groebner dimension of the quotient by the basis members; a mismatch
    /// with the closed-form multinomial is a hard error.
    pub fn quotient_dimension(&self) -> Result<u64, String> {
        let expected = self.expected_dimension();
        let dim = if self.ring.nvars() == 0 {
            // No variables: every member is a constant, necessarily zero.
            for i in self.member_indices() {
                if !self.reduced_member(i).is_zero() {
                    return Err(format!("member {i} is a nonzero constant"));
                }
            }
            1
        } else {
            let gens = self.basis_members();
            if gens.is_empty() {
                return Err("empty basis over a ring with variables".into());
            }
            match groebner(&gens).quotient_dimension() {
                QuotientDim::Finite(d) => d,
                QuotientDim::Infinite => {
                    return Err("quotient by the basis is not finite-dimensional".into())
                }
            }
        };
        if dim == expected {
            Ok(dim)
        } else {
            Err(format!(
                "quotient dimension {dim} differs from the multinomial {expected}"
            ))
        }
    }

    /// Certifies that the basis subfamily is a regular sequence. For mu the
    /// leading-form criterion applies directly; for nu/xi the odd-index
    /// spin generators are eliminated first (they occur linearly and
    /// triangularly in the odd members) and the criterion is applied to
    /// the images of the even members.
    pub fn verify_regularity(&self) -> FamilyRegularity {
        match self.kind {
            FamilyKind::Mu => {
                if self.ring.nvars() == 0 {
                    return FamilyRegularity {
                        verdict: RegularityVerdict::Regular {
                            method: "trivial",
                            detail: "no variables, empty basis".into(),
                        },
                        staged: false,
                        notes: vec![],
                    };
                }
                let verdict =
                    is_regular_sequence(&self.basis_members(), RegularityMethod::LeadingForm);
                FamilyRegularity { verdict, staged: false, notes: vec![] }
            }
            FamilyKind::Nu | FamilyKind::Xi => self.verify_regularity_staged(),
        }
    }

    fn odd_alpha_ids(&self) -> Vec<usize> {
        let alpha = self.alpha.as_ref().unwrap();
        (0..alpha.vars.len())
            .filter(|i| (i + 1) % 2 == 1)
            .map(|i| alpha.vars[i])
            .collect()
    }

    /// Checks that the odd basis members are triangular in the odd spin
    /// generators: member i = a_i + (terms with one odd a_j, j < i, exp 1)
    /// + (pure block terms and constants).
    fn odd_members_triangular(&self) -> Result<(), String> {
        let alpha = self.alpha.as_ref().unwrap();
        for i in (1..=self.m as usize).step_by(2) {
            let member = self.member(i);
            let expected_lead = Poly2::var(&self.ring, alpha.vars[i - 1]);
            let rest = member + &expected_lead;
            for term in rest.terms() {
                let mut odd_seen = 0u32;
                for (j, aid) in alpha.vars.iter().enumerate() {
                    let e = term.0[*aid];
                    let idx = j + 1;
                    if idx % 2 == 0 {
                        if e != 0 {
                            return Err(format!(
                                "odd member {i} contains even spin generator a{idx}"
                            ));
                        }
                    } else if e > 0 {
                        if e > 1 || idx >= i {
                            return Err(format!(
                                "odd member {i} is not triangular at a{idx}^{e}"
                            ));
                        }
                        odd_seen += 1;
                    }
                }
                if odd_seen > 1 {
                    return Err(format!("odd member {i} has a term with two spin factors"));
                }
            }
        }
        Ok(())
    }

    /// The reduced ring after eliminating odd spin generators, plus the
    /// variable images of the full ring into it. Even spin generator a_{2j}
    /// carries weight j there, matching the leading forms of the even
    /// members.
    fn staged_ring(&self) -> (Arc<Ring>, Vec<Poly2>) {
        let alpha = self.alpha.as_ref().unwrap();
        let mut vars = Vec::new();
        let mut even_map = HashMap::new();
        for j in 1..=self.m / 2 {
            even_map.insert(2 * j as usize, vars.len());
            vars.push(Variable::new(format!("a{}", 2 * j), j as u32));
        }
        let mut beta_map = HashMap::new();
        for (p, &n) in self.blocks.iter().enumerate() {
            for i in 1..=n / 2 {
                beta_map.insert(self.beta[p].vars[i as usize - 1], vars.len());
                vars.push(Variable::new(format!("b{}_{}", i, p + 1), i as u32));
            }
        }
        let staged = Ring::new(vars);

        // Back-substitution for odd spin generators. For nu members the
        // odd generators vanish; for xi the elimination of a_i from member
        // i leaves lower odd generators, already substituted.
        let mut images: Vec<Poly2> = vec![Poly2::zero(&staged); self.ring.nvars()];
        for (full_id, staged_id) in &beta_map {
            images[*full_id] = Poly2::var(&staged, *staged_id);
        }
        for (idx, staged_id) in &even_map {
            images[alpha.vars[idx - 1]] = Poly2::var(&staged, *staged_id);
        }
        for i in (1..=self.m as usize).step_by(2) {
            let aid = alpha.vars[i - 1];
            let expr = self.member(i) + &Poly2::var(&self.ring, aid);
            // expr involves only lower odd generators (already mapped),
            // block generators, and constants.
            images[aid] = expr.substitute(&images).expect("staged substitution");
        }
        (staged, images)
    }

    fn verify_regularity_staged(&self) -> FamilyRegularity {
        let mut notes = Vec::new();
        if let Err(e) = self.odd_members_triangular() {
            return FamilyRegularity {
                verdict: RegularityVerdict::Inconclusive { detail: e },
                staged: true,
                notes,
            };
        }
        let odd_count = self.basis.iter().filter(|i| *i % 2 == 1).count();
        notes.push(format!(
            "{odd_count} odd members eliminate the odd spin generators linearly"
        ));

        let (staged, images) = self.staged_ring();
        // The odd members must vanish under their own elimination.
        for i in (1..=self.m as usize).step_by(2) {
            let img = self.member(i).substitute(&images).expect("substitution");
            if !img.is_zero() {
                return FamilyRegularity {
                    verdict: RegularityVerdict::Inconclusive {
                        detail: format!("odd member {i} does not vanish after elimination"),
                    },
                    staged: true,
                    notes,
                };
            }
        }
        let evens: Vec<Poly2> = self
            .basis
            .iter()
            .filter(|i| *i % 2 == 0)
            .map(|&i| self.member(i).substitute(&images).expect("substitution"))
            .collect();
        if staged.nvars() == 0 {
            let ok = evens.iter().all(|p| p.is_zero());
            let verdict = if ok {
                RegularityVerdict::Regular {
                    method: "trivial",
                    detail: "no generators remain after elimination".into(),
                }
            } else {
                RegularityVerdict::NotRegular {
                    method: "staged",
                    detail: "nonzero constant member".into(),
                }
            };
            return FamilyRegularity { verdict, staged: true, notes };
        }
        notes.push(format!(
            "{} even members checked by leading forms over {} generators",
            evens.len(),
            staged.nvars()
        ));
        let verdict = is_regular_sequence(&evens, RegularityMethod::LeadingForm);
        FamilyRegularity { verdict, staged: true, notes }
    }

    /// Expresses every surplus member as a combination of basis members:
    /// scalar coefficients for mu and for even nu members; block-subring
    /// coefficients for odd nu/xi members and (as a fallback when scalars
    /// fail, which does occur) for even xi members. The subring bound is
    /// escalated once before giving up.
    pub fn reduce_surplus(&self) -> Result<Vec<Reduction>, String> {
        let beta_vars = self.beta_var_ids();
        let mut out = Vec::new();
        for index in self.surplus_indices() {
            let target = self.reduced_member(index);
            let (candidates, idxs): (Vec<Poly2>, Vec<usize>) = match self.kind {
                FamilyKind::Mu => (
                    self.basis_members(),
                    self.basis.clone(),
                ),
                FamilyKind::Nu | FamilyKind::Xi => {
                    // nu surplus members combine basis members of the same
                    // parity; xi surplus members may need both parities.
                    let same_parity_only = self.kind == FamilyKind::Nu;
                    let idxs: Vec<usize> = self
                        .basis
                        .iter()
                        .copied()
                        .filter(|&i| i < index && (!same_parity_only || i % 2 == index % 2))
                        .collect();
                    (idxs.iter().map(|&i| self.reduced_member(i)).collect(), idxs)
                }
            };
            let scalar_first = match self.kind {
                FamilyKind::Mu => true,
                _ => index % 2 == 0,
            };
            let combo = self.solve_one(&target, &candidates, scalar_first, &beta_vars)?;
            out.push(Reduction {
                index,
                combination: idxs
                    .into_iter()
                    .zip(combo)
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            });
        }
        Ok(out)
    }

    fn solve_one(
        &self,
        target: &Poly2,
        candidates: &[Poly2],
        scalar_first: bool,
        beta_vars: &[usize],
    ) -> Result<Vec<Poly2>, String> {
        if scalar_first {
            if let SolveOutcome::Combination(c) =
                solve_linear_combination(target, candidates, &CoeffMode::Scalars)
            {
                return Ok(c.coefficients);
            }
            if self.kind == FamilyKind::Mu {
                return Err("no scalar combination for a mu member".into());
            }
        }
        let base_bound = target.total_degree() + 2;
        for bound in [base_bound, 2 * base_bound] {
            let mode = CoeffMode::Subring {
                vars: beta_vars.to_vec(),
                degree_bound: Some(bound),
            };
            if let SolveOutcome::Combination(c) =
                solve_linear_combination(target, candidates, &mode)
            {
                return Ok(c.coefficients);
            }
        }
        Err(format!(
            "no subring combination up to degree {}",
            2 * base_bound
        ))
    }

    /// Total weight of the block generators: the largest index of a basis
    /// member of the mu family, and the shift between mu and sigma
    /// numbering.
    pub fn sigma_offset(&self) -> i64 {
        self.blocks.iter().map(|&n| (n / 2) as i64).sum()
    }

    /// Number of odd blocks; the sigma symmetry reflects at this value.
    pub fn odd_block_count(&self) -> u64 {
        self.blocks.iter().filter(|&&n| n % 2 == 1).count() as u64
    }

    /// The recentred member sigma_j = mu_{j + offset}, extended to all of Z
    /// by the index reflection and by zero outside the member range.
    pub fn sigma(&self, j: i64) -> Poly2 {
        assert_eq!(self.kind, FamilyKind::Mu, "sigma numbering is for the mu family");
        let n: i64 = self.blocks.iter().map(|&b| b as i64).sum();
        let idx = j + self.sigma_offset();
        if idx < 0 || idx > n {
            return Poly2::zero(&self.ring);
        }
        let folded = idx.min(n - idx);
        self.members[folded as usize].clone()
    }

    /// For the nu family: mutual ideal membership of the odd members up to
    /// the spin parameter and the odd spin generators themselves, with
    /// block-subring coefficients in both directions.
    pub fn odd_members_match_odd_alphas(&self) -> Result<(), String> {
        assert_eq!(self.kind, FamilyKind::Nu);
        let beta_vars = self.beta_var_ids();
        let odd_ids = self.odd_alpha_ids();
        let odd_members: Vec<Poly2> = (1..=self.m as usize)
            .step_by(2)
            .map(|i| self.reduced_member(i))
            .collect();
        let alphas: Vec<Poly2> = odd_ids
            .iter()
            .map(|&v| Poly2::var(&self.ring, v))
            .collect();
        for (label, targets, cands) in [
            ("spin generator in member ideal", &alphas, &odd_members),
            ("member in spin generator ideal", &odd_members, &alphas),
        ] {
            for t in targets {
                let mode = CoeffMode::Subring {
                    vars: beta_vars.clone(),
                    degree_bound: Some(t.total_degree() + 2 + self.m),
                };
                if solve_linear_combination(t, cands, &mode).combination().is_none() {
                    return Err(format!("{label}: no combination for {t}"));
                }
            }
        }
        Ok(())
    }

    /// For the xi family: the identity a_{2j+1} + a_{2j} in the ideal of
    /// the first m members, with block-subring coefficients; `j = 0` uses
    /// a_0 = 1.
    pub fn odd_even_bridge(&self) -> Result<(), String> {
        assert_eq!(self.kind, FamilyKind::Xi);
        let alpha = self.alpha.as_ref().unwrap();
        let beta_vars = self.beta_var_ids();
        let candidates: Vec<Poly2> = (1..=self.m as usize)
            .map(|i| self.reduced_member(i))
            .collect();
        if candidates.is_empty() {
            return Ok(());
        }
        let mut j = 0i64;
        while 2 * j < self.m as i64 {
            let hi = match alpha.resolve(2 * j + 1) {
                Resolved::Var(v) => Poly2::var(&self.ring, v),
                Resolved::One => Poly2::one(&self.ring),
                Resolved::Zero => Poly2::zero(&self.ring),
            };
            let lo = match alpha.resolve(2 * j) {
                Resolved::Var(v) => Poly2::var(&self.ring, v),
                Resolved::One => Poly2::one(&self.ring),
                Resolved::Zero => Poly2::zero(&self.ring),
            };
            let target = &hi + &lo;
            let mode = CoeffMode::Subring {
                vars: beta_vars.clone(),
                degree_bound: Some(target.total_degree() + 2 + self.m),
            };
            if solve_linear_combination(&target, &candidates, &mode)
                .combination()
                .is_none()
            {
                return Err(format!("no combination for a{} + a{}", 2 * j + 1, 2 * j));
            }
            j += 1;
        }
        Ok(())
    }
}

/// The homogeneous counterpart used by the leading-form criterion: plain
/// (unfolded) chains X1_p..X{s_p}_p of weights 1..s_p, with members
/// Q_1..Q_N, N = sum of sizes.
pub fn q_family(sizes: &[u64]) -> (Arc<Ring>, Vec<Poly2>) {
    let mut vars = Vec::new();
    let mut chains = Vec::new();
    for (p, &s) in sizes.iter().enumerate() {
        let mut ids = Vec::new();
        for i in 1..=s {
            ids.push(vars.len());
            vars.push(Variable::new(format!("X{}_{}", i, p + 1), i as u32));
        }
        chains.push((s, ids));
    }
    let ring = Ring::new(vars);
    let chains: Vec<VarChain> = chains
        .into_iter()
        .map(|(s, ids)| VarChain::plain(s as i64, ids))
        .collect();
    let n: u64 = sizes.iter().sum();
    let members = (1..=n)
        .map(|a| composition_sum(&ring, &chains, a as i64))
        .collect();
    (ring, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::normal_form;

    fn poly(f: &RelationFamily, text: &str) -> Poly2 {
        Poly2::parse(f.ring(), text).unwrap()
    }

    #[test]
    fn mu_members_for_blocks_3_5() {
        let f = mu_family(&[3, 5]);
        assert_eq!(f.member_indices(), 0..5);
        assert_eq!(f.member(0).to_string(), "1");
        assert_eq!(f.member(1), &poly(&f, "b1_1 + b1_2"));
        assert_eq!(f.member(2), &poly(&f, "b1_1 + b1_1*b1_2 + b2_2"));
        assert_eq!(f.member(3), &poly(&f, "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2"));
        assert!(f.member(4).is_zero());
        assert_eq!(f.basis_set(), &[1, 2, 3]);
        // Canonical rendering sorts by weighted degrevlex, constant last.
        assert_eq!(f.member(3).to_string(), "b1_1*b2_2 + b1_1*b1_2 + b2_2 + 1");
    }

    #[test]
    fn mu_symmetry_under_index_reflection() {
        for blocks in [vec![3, 5], vec![2, 2], vec![4], vec![1, 2, 3]] {
            let f = mu_family(&blocks);
            let n: i64 = blocks.iter().map(|&b| b as i64).sum();
            for k in 0..=n {
                let a = composition_sum(f.ring(), &f.beta, k);
                let b = composition_sum(f.ring(), &f.beta, n - k);
                assert_eq!(a, b, "mu_{k} vs mu_{} on {blocks:?}", n - k);
            }
        }
    }

    #[test]
    fn mu_rank_constants_match_binomials() {
        let f = mu_family(&[3, 5]);
        for i in f.member_indices() {
            assert_eq!(f.rank_constant(i), binom_mod2(8, i as i64));
        }
    }

    #[test]
    fn nu_members_for_m2_blocks_3_5() {
        let f = nu_family(2, &[3, 5]);
        assert_eq!(f.member_indices(), 1..11);
        let mu1 = "b1_1 + b1_2";
        let mu2 = "b1_1 + b1_1*b1_2 + b2_2";
        let mu3 = "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2";
        let expand = |text: &str| poly(&f, text);
        let times = |a: &str, s: &str| {
            let va = poly(&f, a);
            &va * &poly(&f, s)
        };
        assert_eq!(f.member(1), &expand("a1"));
        assert_eq!(f.member(2), &(&expand("a2") + &expand(mu1)));
        assert_eq!(f.member(3), &(&expand("a1") + &times("a1", mu1)));
        // Printed with both constants, which cancel over GF(2).
        assert_eq!(
            f.member(4),
            &(&(&expand("1") + &times("a2", mu1)) + &(&expand(mu2) + &expand("1")))
        );
        assert_eq!(f.member(5), &(&times("a1", mu1) + &times("a1", mu2)));
        assert_eq!(
            f.member(6),
            &(&(&expand(mu1) + &times("a2", mu2)) + &expand(mu3))
        );
        assert_eq!(f.member(7), &(&times("a1", mu2) + &times("a1", mu3)));
        assert_eq!(f.member(8), &(&expand(mu2) + &times("a2", mu3)));
        assert_eq!(f.member(9), &times("a1", mu3));
        assert!(f.member(10).is_zero());
        assert_eq!(f.basis_set(), &[1, 2, 4, 6, 8]);
    }

    #[test]
    fn xi_members_for_m2_blocks_3_5() {
        let f = xi_family(2, &[3, 5]);
        let mu1 = "b1_1 + b1_2";
        let mu2 = "b1_1 + b1_1*b1_2 + b2_2";
        let mu3 = "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2";
        let expand = |text: &str| poly(&f, text);
        let times = |a: &str, s: &str| {
            let va = poly(&f, a);
            &va * &poly(&f, s)
        };
        assert_eq!(f.member(1), &expand("a1 + 1"));
        assert_eq!(f.member(2), &(&expand("a2") + &expand(mu1)));
        assert_eq!(f.member(3), &(&expand("a2") + &times("a1", mu1)));
        assert_eq!(
            f.member(4),
            &(&(&expand("a1") + &times("a2", mu1)) + &(&expand(mu2) + &expand("1")))
        );
        assert_eq!(f.member(5), &(&times("a2", mu1) + &times("a1", mu2)));
        assert_eq!(
            f.member(6),
            &(&(&times("a1", mu1) + &times("a2", mu2)) + &expand(mu3))
        );
        assert_eq!(
            f.member(7),
            &(&(&expand(mu1) + &times("a2", mu2)) + &times("a1", mu3))
        );
        assert_eq!(f.member(8), &(&times("a1", mu2) + &times("a2", mu3)));
        assert_eq!(f.member(9), &(&expand(mu2) + &times("a2", mu3)));
        assert_eq!(f.member(10), &(&times("a1", mu3) + &expand(mu3)));
        assert_eq!(f.basis_set(), &[1, 2, 4, 6, 8]);
    }

    #[test]
    fn xi_first_member_is_a1_plus_one() {
        for (m, blocks) in [(1u64, vec![]), (2, vec![2]), (3, vec![1, 4])] {
            let f = xi_family(m, &blocks);
            let expected = Poly2::parse(f.ring(), "a1 + 1").unwrap();
            assert_eq!(f.member(1), &expected, "m={m} blocks={blocks:?}");
        }
    }

    #[test]
    fn mu_regularity_and_dimension_3_5() {
        let f = mu_family(&[3, 5]);
        let reg = f.verify_regularity();
        assert!(reg.verdict.is_regular(), "{reg:?}");
        assert_eq!(f.quotient_dimension().unwrap(), 3);
    }

    #[test]
    fn mu_quotient_matches_single_variable_presentation() {
        // Eliminating along the relations for blocks (3,5) leaves
        // Z2[b]/(1 + b + b^2 + b^3), so that cubic is an ideal member.
        let f = mu_family(&[3, 5]);
        let gens: Vec<Poly2> = f.basis_set().iter().map(|&i| f.reduced_member(i)).collect();
        let gb = groebner(&gens);
        let cubic = Poly2::parse(f.ring(), "1 + b1_1 + b1_1^2 + b1_1^3").unwrap();
        assert!(normal_form(&cubic, &gb).is_zero());
    }

    #[test]
    fn nu_regularity_dimension_reductions() {
        let f = nu_family(2, &[3, 5]);
        let reg = f.verify_regularity();
        assert!(reg.verdict.is_regular(), "{reg:?}");
        assert!(reg.staged);
        assert_eq!(f.quotient_dimension().unwrap(), 12);
        let reductions = f.reduce_surplus().unwrap();
        let indices: Vec<usize> = reductions.iter().map(|r| r.index).collect();
        assert_eq!(indices, vec![3, 5, 7, 9, 10]);
        // nu_3 = (1 + mu_1) nu_1.
        let r3 = &reductions[0];
        assert_eq!(r3.combination.len(), 1);
        assert_eq!(r3.combination[0].0, 1);
        // nu_10 = 0: empty combination.
        assert!(reductions[4].combination.is_empty());
    }

    #[test]
    fn xi_regularity_dimension_reductions() {
        let f = xi_family(2, &[3, 5]);
        let reg = f.verify_regularity();
        assert!(reg.verdict.is_regular(), "{reg:?}");
        assert_eq!(f.quotient_dimension().unwrap(), 12);
        let reductions = f.reduce_surplus().unwrap();
        assert_eq!(reductions.len(), 5);
        // The even surplus member investigates the scalar mode first but
        // requires block-subring coefficients.
        let r10 = reductions.iter().find(|r| r.index == 10).unwrap();
        assert!(r10.combination.iter().any(|(_, c)| c.total_degree() > 0));
    }

    #[test]
    fn xi_direct_prefix_cross_check() {
        let f = xi_family(2, &[3, 5]);
        let seq = vec![f.reduced_member(1), f.reduced_member(2)];
        let v = is_regular_sequence(&seq, RegularityMethod::Direct(Some(6)));
        assert!(v.is_regular(), "{v:?}");
    }

    #[test]
    fn nu_odd_ideal_identity() {
        for (m, blocks) in [(2u64, vec![3, 5]), (3, vec![2]), (4, vec![1])] {
            let f = nu_family(m, &blocks);
            f.odd_members_match_odd_alphas().unwrap();
        }
    }

    #[test]
    fn xi_bridge_identity() {
        for (m, blocks) in [(2u64, vec![3, 5]), (3, vec![2]), (5, vec![1])] {
            let f = xi_family(m, &blocks);
            f.odd_even_bridge().unwrap();
        }
    }

    #[test]
    fn q_family_dimension_is_multinomial() {
        for sizes in [vec![1u64], vec![2], vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 1]] {
            let (_, members) = q_family(&sizes);
            let gb = groebner(&members);
            let expected = multinomial(&sizes);
            assert_eq!(
                gb.quotient_dimension(),
                QuotientDim::Finite(expected),
                "sizes {sizes:?}"
            );
        }
    }

    #[test]
    fn mu_leading_forms_are_q_members() {
        // Positionally, b{i}_{p} of the family corresponds to X{i}_{p} of
        // the homogeneous family on the halved block sizes.
        let f = mu_family(&[3, 5]);
        let (q_ring, q) = q_family(&[1, 2]);
        assert_eq!(q_ring.nvars(), f.ring().nvars());
        let images: Vec<Poly2> = (0..q_ring.nvars()).map(|i| Poly2::var(f.ring(), i)).collect();
        for (k, qk) in (1..=3).zip(q) {
            let lf = f.reduced_member(k).leading_form();
            assert_eq!(lf, qk.substitute(&images).unwrap(), "index {k}");
        }
    }

    #[test]
    fn degenerate_families() {
        // All blocks of size 1 and small m: no variables at all.
        let f = nu_family(1, &[1, 1]);
        assert_eq!(f.quotient_dimension().unwrap(), 1);
        assert!(f.verify_regularity().verdict.is_regular());
        assert!(f.reduce_surplus().unwrap().iter().all(|r| r.combination.len() <= 1));

        let f = mu_family(&[1, 1, 1]);
        assert_eq!(f.quotient_dimension().unwrap(), 1);
        assert!(f.reduce_surplus().unwrap()[0].combination.is_empty());
    }

    #[test]
    fn blocks_reorder_evens_first_for_mu() {
        let f = mu_family(&[3, 2]);
        assert_eq!(f.blocks(), &[2, 3]);
        assert_eq!(f.original_blocks(), &[3, 2]);
    }
}
