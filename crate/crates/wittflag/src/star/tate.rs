//! Tate cohomology of free modules whose involution is a signed permutation
//! of a chosen basis.
//!
//! For such a module the orbit calculus is complete: a basis element fixed
//! with sign +1 survives into the plus part, one fixed with sign -1 into the
//! minus part, and a two-element orbit contributes nothing (regardless of
//! signs, since id +- * maps the orbit span onto the relevant kernel).

/// A free abelian group with involution given by `basis[i] -> sign * basis[j]`.
#[derive(Clone, Debug)]
pub struct SignedModule {
    pub basis: Vec<String>,
    /// Image index and sign for each basis element.
    pub involution: Vec<(usize, i8)>,
}

impl SignedModule {
    pub fn new(basis: Vec<String>, involution: Vec<(usize, i8)>) -> Self {
        let module = SignedModule { basis, involution };
        module.validate();
        module
    }

    fn validate(&self) {
        assert_eq!(self.basis.len(), self.involution.len());
        for (i, &(j, s)) in self.involution.iter().enumerate() {
            assert!(s == 1 || s == -1);
            let (k, t) = self.involution[j];
            assert_eq!(k, i, "involution must square to the identity");
            assert_eq!(s * t, 1, "signs along an orbit must cancel");
        }
    }
}

/// Tate cohomology basis classes of a module or truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateClasses {
    pub plus_basis: Vec<String>,
    pub minus_basis: Vec<String>,
    /// Truncation degree used when the module is one graded piece of a ring;
    /// 0 for ungraded modules.
    pub bound: u64,
}

pub fn tate_of_signed_module(module: &SignedModule) -> TateClasses {
    module.validate();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (i, &(j, s)) in module.involution.iter().enumerate() {
        if i == j {
            if s == 1 {
                plus.push(module.basis[i].clone());
            } else {
                minus.push(module.basis[i].clone());
            }
        }
    }
    TateClasses {
        plus_basis: plus,
        minus_basis: minus,
        bound: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_elements_split_by_sign() {
        let m = SignedModule::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![(0, 1), (2, 1), (1, 1), (3, -1)],
        );
        let classes = tate_of_signed_module(&m);
        assert_eq!(classes.plus_basis, ["a"]);
        assert_eq!(classes.minus_basis, ["d"]);
    }

    #[test]
    fn swapped_pair_contributes_nothing() {
        let m = SignedModule::new(
            vec!["a".into(), "b".into()],
            vec![(1, 1), (0, 1)],
        );
        let classes = tate_of_signed_module(&m);
        assert!(classes.plus_basis.is_empty());
        assert!(classes.minus_basis.is_empty());
    }

    #[test]
    fn signed_pair_contributes_nothing() {
        let m = SignedModule::new(
            vec!["a".into(), "b".into()],
            vec![(1, -1), (0, -1)],
        );
        let classes = tate_of_signed_module(&m);
        assert!(classes.plus_basis.is_empty());
        assert!(classes.minus_basis.is_empty());
    }

    #[test]
    fn dimension_count_matches_fixed_points() {
        // dim h+ + dim h- equals the number of fixed basis elements.
        let m = SignedModule::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into(), "e".into()],
            vec![(0, -1), (1, 1), (3, 1), (2, 1), (4, 1)],
        );
        let classes = tate_of_signed_module(&m);
        let fixed = m
            .involution
            .iter()
            .enumerate()
            .filter(|&(i, &(j, _))| i == j)
            .count();
        assert_eq!(classes.plus_basis.len() + classes.minus_basis.len(), fixed);
    }

    #[test]
    #[should_panic(expected = "square")]
    fn non_involutive_permutation_rejected() {
        SignedModule::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(1, 1), (2, 1), (0, 1)],
        );
    }
}
