//! Expressing a polynomial as a linear combination of candidates, with
//! either scalar (GF(2)) coefficients or coefficients drawn from a
//! designated subring up to a degree bound.

use super::regular::all_monomials_to_degree;
use super::{Monomial, Poly2};
use crate::gf2::{pack_bits, solve_columns};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub enum CoeffMode {
    Scalars,
    /// Coefficients are polynomials in the given variables, of weighted
    /// degree at most the bound; `None` selects `deg(target) + 2`.
    Subring {
        vars: Vec<usize>,
        degree_bound: Option<u64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination {
    /// One coefficient polynomial per candidate (zero when unused).
    pub coefficients: Vec<Poly2>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Combination(Combination),
    None,
    NoneAtBound { degree_bound: u64 },
}

impl SolveOutcome {
    pub fn combination(&self) -> Option<&Combination> {
        match self {
            SolveOutcome::Combination(c) => Some(c),
            _ => None,
        }
    }
}

/// Solves `target = sum coeff_i * candidate_i` in the requested mode. Any
/// returned combination has been verified by substitution.
pub fn solve_linear_combination(
    target: &Poly2,
    candidates: &[Poly2],
    mode: &CoeffMode,
) -> SolveOutcome {
    let ring = target.ring().clone();
    for c in candidates {
        assert_eq!(c.ring(), &ring, "candidates must share the target ring");
    }

    // (candidate index, multiplier monomial, multiplied candidate).
    let one = Monomial::one(ring.nvars());
    let scaled: Vec<(usize, Monomial, Poly2)> = match mode {
        CoeffMode::Scalars => candidates
            .iter()
            .enumerate()
            .map(|(i, c)| (i, one.clone(), c.clone()))
            .collect(),
        CoeffMode::Subring { vars, degree_bound } => {
            let bound = degree_bound.unwrap_or(target.total_degree() + 2);
            let sub = subring_monomials(&ring, vars, bound);
            let mut out = Vec::with_capacity(candidates.len() * sub.len());
            for (i, c) in candidates.iter().enumerate() {
                for m in &sub {
                    out.push((i, m.clone(), c.mul_monomial(m)));
                }
            }
            out
        }
    };

    let mut row_of: HashMap<&Monomial, usize> = HashMap::new();
    for (_, _, p) in &scaled {
        for t in p.terms() {
            let next = row_of.len();
            row_of.entry(t).or_insert(next);
        }
    }
    for t in target.terms() {
        let next = row_of.len();
        row_of.entry(t).or_insert(next);
    }
    let nrows = row_of.len().max(1);

    let columns: Vec<Vec<u64>> = scaled
        .iter()
        .map(|(_, _, p)| pack_bits(nrows, p.terms().iter().map(|t| row_of[t])))
        .collect();
    let rhs = pack_bits(nrows, target.terms().iter().map(|t| row_of[t]));

    let Some(solution) = solve_columns(nrows, &columns, &rhs) else {
        return match mode {
            CoeffMode::Scalars => SolveOutcome::None,
            CoeffMode::Subring { degree_bound, .. } => SolveOutcome::NoneAtBound {
                degree_bound: degree_bound.unwrap_or(target.total_degree() + 2),
            },
        };
    };

    let mut coefficients = vec![Poly2::zero(&ring); candidates.len()];
    for (k, used) in solution.iter().enumerate() {
        if !used {
            continue;
        }
        let (i, m, _) = &scaled[k];
        coefficients[*i] = &coefficients[*i] + &Poly2::monomial(&ring, m.clone());
    }

    // Substitution check: the combination must literally reproduce the target.
    let mut acc = Poly2::zero(&ring);
    for (c, cand) in coefficients.iter().zip(candidates) {
        acc = &acc + &(c * cand);
    }
    assert_eq!(&acc, target, "solver produced an invalid combination");

    SolveOutcome::Combination(Combination { coefficients })
}

fn subring_monomials(
    ring: &std::sync::Arc<super::Ring>,
    vars: &[usize],
    bound: u64,
) -> Vec<Monomial> {
    all_monomials_to_degree(ring, bound)
        .into_iter()
        .filter(|m| {
            m.0.iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || vars.contains(&i))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::{Ring, Variable};

    fn ring3() -> std::sync::Arc<Ring> {
        Ring::new(vec![
            Variable::new("a", 1),
            Variable::new("b", 1),
            Variable::new("c", 1),
        ])
    }

    #[test]
    fn zero_target_has_zero_combination() {
        let r = ring3();
        let candidates = vec![
            Poly2::parse(&r, "a + b").unwrap(),
            Poly2::parse(&r, "b + c").unwrap(),
        ];
        let outcome =
            solve_linear_combination(&Poly2::zero(&r), &candidates, &CoeffMode::Scalars);
        let combo = outcome.combination().unwrap();
        assert!(combo.coefficients.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn scalar_combination_found() {
        let r = ring3();
        let candidates = vec![
            Poly2::parse(&r, "a + b").unwrap(),
            Poly2::parse(&r, "b + c").unwrap(),
            Poly2::parse(&r, "a*b").unwrap(),
        ];
        let target = Poly2::parse(&r, "a + c").unwrap();
        let outcome = solve_linear_combination(&target, &candidates, &CoeffMode::Scalars);
        let combo = outcome.combination().unwrap();
        assert_eq!(combo.coefficients[0].to_string(), "1");
        assert_eq!(combo.coefficients[1].to_string(), "1");
        assert!(combo.coefficients[2].is_zero());
    }

    #[test]
    fn scalar_failure_reported() {
        let r = ring3();
        let candidates = vec![Poly2::parse(&r, "a + b").unwrap()];
        let target = Poly2::parse(&r, "a").unwrap();
        assert_eq!(
            solve_linear_combination(&target, &candidates, &CoeffMode::Scalars),
            SolveOutcome::None
        );
    }

    #[test]
    fn subring_combination_found() {
        let r = ring3();
        // target = (b + c) * a = a*b + a*c with coefficient from {a}-subring.
        let candidates = vec![Poly2::parse(&r, "b + c").unwrap()];
        let target = Poly2::parse(&r, "a*b + a*c").unwrap();
        let mode = CoeffMode::Subring { vars: vec![0], degree_bound: Some(3) };
        let outcome = solve_linear_combination(&target, &candidates, &mode);
        let combo = outcome.combination().unwrap();
        assert_eq!(combo.coefficients[0].to_string(), "a");
    }

    #[test]
    fn subring_bound_failure() {
        let r = ring3();
        let candidates = vec![Poly2::parse(&r, "b").unwrap()];
        let target = Poly2::parse(&r, "a^5*b").unwrap();
        let mode = CoeffMode::Subring { vars: vec![0], degree_bound: Some(2) };
        assert_eq!(
            solve_linear_combination(&target, &candidates, &mode),
            SolveOutcome::NoneAtBound { degree_bound: 2 }
        );
        let mode = CoeffMode::Subring { vars: vec![0], degree_bound: Some(5) };
        assert!(solve_linear_combination(&target, &candidates, &mode)
            .combination()
            .is_some());
    }
}
