//! Buchberger's algorithm over GF(2) with Gebauer-Moeller pair pruning,
//! normal forms, and quotient dimension via standard monomials.
//!
//! Determinism is preferred over raw speed: pairs are processed by minimal
//! lcm in the term order and the final basis is reduced and sorted, so the
//! output depends only on the input ideal and the ring.

use super::{Monomial, Poly2, Ring};
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    generators: Vec<Poly2>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly2] {
        &self.generators
    }

    pub fn leading_terms(&self) -> Vec<&Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_term())
            .collect()
    }

    pub fn contains_ideal_member(&self, p: &Poly2) -> bool {
        normal_form(p, self).is_zero()
    }
}

/// Fully reduces `p` modulo the basis: every term divisible by some
/// leading term is rewritten until none is. With a degree-graded order the
/// weighted degree never increases, so this terminates.
pub fn normal_form(p: &Poly2, gb: &GroebnerBasis) -> Poly2 {
    let ring = p.ring().clone();
    let mut rem = p.clone();
    let mut done: Vec<Monomial> = Vec::new();
    while let Some(lt) = rem.leading_term().cloned() {
        let divisor = gb.generators.iter().find(|g| {
            g.leading_term()
                .expect("basis elements are nonzero")
                .divides(&lt)
        });
        match divisor {
            Some(g) => {
                let shift = lt.div(g.leading_term().unwrap());
                rem = &rem + &g.mul_monomial(&shift);
            }
            None => {
                done.push(lt);
                rem = Poly2::from_monomials(&ring, rem.terms()[1..].iter().cloned());
            }
        }
    }
    // `done` was collected in descending order already.
    Poly2::from_monomials(&ring, done)
}

fn s_polynomial(f: &Poly2, g: &Poly2) -> Poly2 {
    let lf = f.leading_term().unwrap();
    let lg = g.leading_term().unwrap();
    let l = lf.lcm(lg);
    &f.mul_monomial(&l.div(lf)) + &g.mul_monomial(&l.div(lg))
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`
/// (zero generators are ignored) in the weighted degrevlex order of their
/// common ring.
pub fn groebner(gens: &[Poly2]) -> GroebnerBasis {
    let ring = gens
        .first()
        .map(|p| p.ring().clone())
        .expect("at least one generator");
    let mut basis: Vec<Poly2> = Vec::new();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();

    let mut queue: Vec<Poly2> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    queue.sort_by(|a, b| ring.cmp_monomials(a.leading_term().unwrap(), b.leading_term().unwrap()));

    // Interreduce incoming generators against the current basis before
    // insertion; each insertion updates the pair set with the
    // Gebauer-Moeller criteria.
    let mut pending: std::collections::VecDeque<Poly2> = queue.into();
    while let Some(next) = pending.pop_front() {
        let interim = GroebnerBasis { ring: ring.clone(), generators: basis.clone() };
        let reduced = if basis.is_empty() { next } else { normal_form(&next, &interim) };
        if reduced.is_zero() {
            continue;
        }
        add_with_update(&mut basis, &mut pairs, reduced);

        while let Some(pos) = select_pair(&ring, &pairs) {
            let (i, j, _) = pairs.swap_remove(pos);
            let s = s_polynomial(&basis[i], &basis[j]);
            let interim = GroebnerBasis { ring: ring.clone(), generators: basis.clone() };
            let r = normal_form(&s, &interim);
            if !r.is_zero() {
                add_with_update(&mut basis, &mut pairs, r);
            }
        }
    }

    // Minimize: drop elements whose leading term is divisible by another's.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let li = basis[i].leading_term().unwrap();
                let lj = basis[j].leading_term().unwrap();
                if lj.divides(li) && (li != lj || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<Poly2> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Reduce each element against the others for the canonical basis.
    let mut reduced: Vec<Poly2> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly2> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _g)| j != i).map(|(_j, g)| g.clone())
            .collect();
        let gb = GroebnerBasis { ring: ring.clone(), generators: others };
        let r = normal_form(&minimal[i], &gb);
        if !r.is_zero() {
            reduced.push(r);
        }
    }
    reduced.sort_by(|a, b| ring.cmp_monomials(a.leading_term().unwrap(), b.leading_term().unwrap()));
    GroebnerBasis { ring, generators: reduced }
}

fn select_pair(ring: &Ring, pairs: &[(usize, usize, Monomial)]) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| match ring.cmp_monomials(&a.2, &b.2) {
            Ordering::Equal => (a.0, a.1).cmp(&(b.0, b.1)),
            ord => ord,
        })
        .map(|(i, _)| i)
}

/// Gebauer-Moeller update: appends `h` to the basis, prunes old pairs made
/// redundant by `h` (chain criterion) and builds the surviving new pairs
/// (multiple/duplicate-lcm pruning, then the coprimality criterion).
fn add_with_update(
    basis: &mut Vec<Poly2>,
    pairs: &mut Vec<(usize, usize, Monomial)>,
    h: Poly2,
) {
    let t = basis.len();
    let lh = h.leading_term().unwrap().clone();

    pairs.retain(|(i, j, l)| {
        !(lh.divides(l)
            && *l != basis[*i].leading_term().unwrap().lcm(&lh)
            && *l != basis[*j].leading_term().unwrap().lcm(&lh))
    });

    let candidates: Vec<(usize, Monomial)> = basis
        .iter()
        .enumerate()
        .map(|(i, g)| (i, g.leading_term().unwrap().lcm(&lh)))
        .collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    'cand: for (i, l) in &candidates {
        for (j, l2) in &candidates {
            if j != i && l2.divides(l) && l2 != l {
                continue 'cand; // a strictly smaller lcm with h exists
            }
        }
        if kept.iter().any(|(_, l2)| l2 == l) {
            continue; // one pair per lcm suffices
        }
        kept.push((*i, l.clone()));
    }
    for (i, l) in kept {
        if !basis[i].leading_term().unwrap().coprime(&lh) {
            pairs.push((i, t, l));
        }
    }
    basis.push(h);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl GroebnerBasis {
    /// Dimension of the quotient ring as a GF(2) vector space, counted via
    /// standard monomials (those divisible by no leading term). The
    /// quotient is finite-dimensional exactly when every variable has a
    /// pure power among the leading terms.
    pub fn quotient_dimension(&self) -> QuotientDim {
        if self.generators.iter().any(|g| g.is_one()) {
            return QuotientDim::Finite(0);
        }
        let n = self.ring.nvars();
        if n == 0 {
            return QuotientDim::Finite(1);
        }
        let lts = self.leading_terms();
        let mut bound = vec![None::<u16>; n];
        for lt in &lts {
            let support: Vec<usize> = (0..n).filter(|&i| lt.0[i] > 0).collect();
            if let [v] = support[..] {
                let b = bound[v].get_or_insert(lt.0[v]);
                *b = (*b).min(lt.0[v]);
            }
        }
        if bound.iter().any(|b| b.is_none()) {
            return QuotientDim::Infinite;
        }
        let bound: Vec<u16> = bound.into_iter().map(|b| b.unwrap()).collect();
        // Enumerate the box below the pure-power bounds and filter.
        let mut count = 0u64;
        let mut exps = vec![0u16; n];
        loop {
            let m = Monomial(exps.clone());
            if !lts.iter().any(|lt| lt.divides(&m)) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return QuotientDim::Finite(count);
                }
                exps[i] += 1;
                if exps[i] < bound[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// All standard monomials of weighted degree at most `max_degree`.
    /// Valid also for infinite-dimensional quotients.
    pub fn standard_monomials_to_degree(&self, max_degree: u64) -> Vec<Monomial> {
        let n = self.ring.nvars();
        let lts = self.leading_terms();
        if lts.iter().any(|lt| lt.is_one()) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut exps = vec![0u16; n];
        fn rec(
            ring: &Ring,
            lts: &[&Monomial],
            exps: &mut Vec<u16>,
            var: usize,
            remaining: u64,
            out: &mut Vec<Monomial>,
        ) {
            if var == exps.len() {
                let m = Monomial(exps.clone());
                if !lts.iter().any(|lt| lt.divides(&m)) {
                    out.push(m);
                }
                return;
            }
            let w = ring.weight(var).max(1) as u64;
            let max_e = (remaining / w).min(u16::MAX as u64) as u16;
            for e in 0..=max_e {
                exps[var] = e;
                rec(ring, lts, exps, var + 1, remaining - e as u64 * w, out);
            }
            exps[var] = 0;
        }
        if n == 0 {
            return vec![Monomial::one(0)];
        }
        rec(&self.ring, &lts, &mut exps, 0, max_degree, &mut out);
        out.sort_by(|a, b| self.ring.cmp_monomials(a, b));
        out
    }
}
