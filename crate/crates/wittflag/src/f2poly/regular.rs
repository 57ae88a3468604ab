//! Regular-sequence verification.
//!
//! Two methods are provided. `LeadingForm` applies the criterion that a
//! sequence whose length equals the number of variables is regular when
//! the ideal of top homogeneous components (with respect to the variable
//! weights) has a finite-dimensional quotient; a success is a proof.
//! `Direct` checks prefix-by-prefix that multiplication by the next
//! element is injective on a degree-truncated quotient; a failure is a
//! genuine zero-divisor certificate, a success is evidence up to the
//! truncation degree.

use super::groebner::{groebner, normal_form, QuotientDim};
use super::{Monomial, Poly2};
use crate::gf2::BitMatrix;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityMethod {
    LeadingForm,
    /// Truncation degree; `None` selects twice the sum of variable weights.
    Direct(Option<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularityVerdict {
    Regular { method: &'static str, detail: String },
    NotRegular { method: &'static str, detail: String },
    Inconclusive { detail: String },
}

impl RegularityVerdict {
    pub fn is_regular(&self) -> bool {
        matches!(self, RegularityVerdict::Regular { .. })
    }
}

pub fn is_regular_sequence(seq: &[Poly2], method: RegularityMethod) -> RegularityVerdict {
    assert!(!seq.is_empty(), "empty sequence");
    let ring = seq[0].ring().clone();
    if seq.iter().any(|f| f.is_zero()) {
        return RegularityVerdict::NotRegular {
            method: "syntactic",
            detail: "sequence contains the zero polynomial".into(),
        };
    }
    if seq.len() > ring.nvars() {
        return RegularityVerdict::NotRegular {
            method: "syntactic",
            detail: format!(
                "length {} exceeds the {} variables, so the sequence cannot be regular",
                seq.len(),
                ring.nvars()
            ),
        };
    }
    match method {
        RegularityMethod::LeadingForm => {
            if seq.len() < ring.nvars() {
                return RegularityVerdict::Inconclusive {
                    detail: format!(
                        "leading-form criterion needs length {} == variable count {}",
                        seq.len(),
                        ring.nvars()
                    ),
                };
            }
            let forms: Vec<Poly2> = seq.iter().map(|f| f.leading_form()).collect();
            let gb = groebner(&forms);
            match gb.quotient_dimension() {
                QuotientDim::Finite(d) => RegularityVerdict::Regular {
                    method: "leading-form",
                    detail: format!("leading forms span a zero-dimensional ideal (dim {d})"),
                },
                QuotientDim::Infinite => RegularityVerdict::Inconclusive {
                    detail: "leading-form ideal is not zero-dimensional".into(),
                },
            }
        }
        RegularityMethod::Direct(cap) => {
            let truncation = cap.unwrap_or_else(|| {
                2 * ring.vars().iter().map(|v| v.weight as u64).sum::<u64>()
            });
            direct_check(seq, truncation)
        }
    }
}

fn direct_check(seq: &[Poly2], truncation: u64) -> RegularityVerdict {
    let ring = seq[0].ring().clone();
    for (i, f) in seq.iter().enumerate() {
        let prefix_gb = if i == 0 {
            None
        } else {
            Some(groebner(&seq[..i]))
        };
        if let Some(gb) = &prefix_gb {
            if gb.generators().iter().any(|g| g.is_one()) {
                return RegularityVerdict::NotRegular {
                    method: "direct",
                    detail: format!("prefix of length {i} already generates the unit ideal"),
                };
            }
        }
        let reach = truncation + f.total_degree();
        let (domain, codomain) = match &prefix_gb {
            Some(gb) => (
                gb.standard_monomials_to_degree(truncation),
                gb.standard_monomials_to_degree(reach),
            ),
            None => (
                all_monomials_to_degree(&ring, truncation),
                all_monomials_to_degree(&ring, reach),
            ),
        };
        let index: HashMap<&Monomial, usize> =
            codomain.iter().enumerate().map(|(j, m)| (m, j)).collect();
        let mut rows = BitMatrix::new(codomain.len());
        for m in &domain {
            let image = match &prefix_gb {
                Some(gb) => normal_form(&f.mul_monomial(m), gb),
                None => f.mul_monomial(m),
            };
            let r = rows.push_empty_row();
            for t in image.terms() {
                let j = *index
                    .get(t)
                    .expect("normal form stays within the degree bound");
                rows.flip(r, j);
            }
        }
        if rows.rank() < domain.len() {
            return RegularityVerdict::NotRegular {
                method: "direct",
                detail: format!(
                    "element {} is a zero divisor modulo the preceding prefix \
                     (kernel found below degree {truncation})",
                    i + 1
                ),
            };
        }
    }
    let gb = groebner(seq);
    if gb.generators().iter().any(|g| g.is_one()) {
        return RegularityVerdict::NotRegular {
            method: "direct",
            detail: "sequence generates the unit ideal".into(),
        };
    }
    RegularityVerdict::Regular {
        method: "direct",
        detail: format!("multiplication injective on all prefixes up to degree {truncation}"),
    }
}

/// All monomials of the ring up to a weighted degree bound, in ascending
/// term order.
pub fn all_monomials_to_degree(
    ring: &std::sync::Arc<super::Ring>,
    max_degree: u64,
) -> Vec<Monomial> {
    let n = ring.nvars();
    if n == 0 {
        return vec![Monomial::one(0)];
    }
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fn rec(
        ring: &super::Ring,
        exps: &mut Vec<u16>,
        var: usize,
        remaining: u64,
        out: &mut Vec<Monomial>,
    ) {
        if var == exps.len() {
            out.push(Monomial(exps.clone()));
            return;
        }
        let w = ring.weight(var).max(1) as u64;
        let max_e = (remaining / w).min(u16::MAX as u64) as u16;
        for e in 0..=max_e {
            exps[var] = e;
            rec(ring, exps, var + 1, remaining - e as u64 * w, out);
        }
        exps[var] = 0;
    }
    rec(ring, &mut exps, 0, max_degree, &mut out);
    out.sort_by(|a, b| ring.cmp_monomials(a, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::{Ring, Variable};

    #[test]
    fn repeated_variable_is_not_regular() {
        let r = Ring::new(vec![Variable::new("x", 1)]);
        let x = Poly2::parse(&r, "x").unwrap();
        let v = is_regular_sequence(&[x.clone(), x], RegularityMethod::Direct(None));
        assert!(matches!(v, RegularityVerdict::NotRegular { .. }), "{v:?}");
    }

    #[test]
    fn variables_are_regular_by_leading_form() {
        let r = Ring::new(vec![Variable::new("x", 1), Variable::new("y", 1)]);
        let seq = vec![Poly2::parse(&r, "x + 1").unwrap(), Poly2::parse(&r, "y^2 + x").unwrap()];
        let v = is_regular_sequence(&seq, RegularityMethod::LeadingForm);
        assert!(v.is_regular(), "{v:?}");
    }

    #[test]
    fn short_sequence_is_inconclusive_for_leading_form() {
        let r = Ring::new(vec![Variable::new("x", 1), Variable::new("y", 1)]);
        let seq = vec![Poly2::parse(&r, "x").unwrap()];
        let v = is_regular_sequence(&seq, RegularityMethod::LeadingForm);
        assert!(matches!(v, RegularityVerdict::Inconclusive { .. }));
        // The direct fallback confirms regularity.
        let v = is_regular_sequence(&seq, RegularityMethod::Direct(None));
        assert!(v.is_regular(), "{v:?}");
    }

    #[test]
    fn zero_divisor_pair_detected() {
        let r = Ring::new(vec![Variable::new("x", 1), Variable::new("y", 1)]);
        // x*y, x: multiplication by x on F2[x,y]/(x*y) kills y.
        let seq = vec![Poly2::parse(&r, "x*y").unwrap(), Poly2::parse(&r, "x").unwrap()];
        let v = is_regular_sequence(&seq, RegularityMethod::Direct(None));
        assert!(matches!(v, RegularityVerdict::NotRegular { .. }), "{v:?}");
    }

    #[test]
    fn too_long_sequences_rejected() {
        let r = Ring::new(vec![Variable::new("x", 1)]);
        let x = Poly2::parse(&r, "x").unwrap();
        let one_plus = Poly2::parse(&r, "x + 1").unwrap();
        let v = is_regular_sequence(&[x, one_plus], RegularityMethod::LeadingForm);
        assert!(matches!(v, RegularityVerdict::NotRegular { .. }));
    }
}
