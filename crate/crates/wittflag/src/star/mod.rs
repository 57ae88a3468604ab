//! Representation rings of block centralizers, with their dualities.
//!
//! Each ring is a (partly Laurent) monomial ring: a polynomial ring in the
//! exterior powers of the block standard representations, with the top power
//! of each block inverted.  The duality sends monomials to monomials, so all
//! Tate-cohomology questions reduce to counting self-dual monomials.
//!
//! Three families are supported:
//!   A: blocks only; the product of the top powers is 1, which we use to
//!      eliminate the top power of the last block.
//!   B: blocks plus a spin parameter m; extra generators y_1..y_{m-1} (self
//!      dual) and t with t* = t * prod_p x_{n_p}^{(p)}.  For m = 0 the spin
//!      generator satisfies t^2 = (prod_p x_{n_p}^{(p)})^{-1}.
//!   C: blocks plus m self-dual generators z_1..z_m.

pub mod lemmas;
pub mod tate;

use serde::Serialize;

use crate::binom::binom_exact;

pub use tate::{tate_of_signed_module, SignedModule, TateClasses};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Generator {
    pub name: String,
    /// Laurent generators may carry negative exponents; they all have rank 1.
    pub laurent: bool,
    pub rank: i64,
}

/// Exponent vector over the ring's generators.  Negative entries occur only
/// at Laurent positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarMonomial(pub Vec<i64>);

impl StarMonomial {
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

pub struct StarRing {
    family: Family,
    m: u64,
    blocks: Vec<u64>,
    gens: Vec<Generator>,
    dual_images: Vec<StarMonomial>,
    /// t^2 rewrites to this exponent vector (type B with m = 0).
    square_rule: Option<(usize, Vec<i64>)>,
}

/// Builds the centralizer representation ring for the given family.
/// Type A takes blocks only (m must be 0); B and C accept any m >= 0 but
/// need at least one block or a positive m.
pub fn build_repring(family: Family, m: u64, blocks: &[u64]) -> Result<StarRing, String> {
    if blocks.contains(&0) {
        return Err("block sizes must be positive".to_string());
    }
    match family {
        Family::A => {
            if m != 0 {
                return Err("type A takes no spin parameter".to_string());
            }
            if blocks.is_empty() {
                return Err("type A needs at least one block".to_string());
            }
        }
        Family::B | Family::C => {
            if blocks.is_empty() && m == 0 {
                return Err("empty parameter list".to_string());
            }
        }
    }

    let l = blocks.len();
    let mut gens: Vec<Generator> = Vec::new();
    // x_index[p][k-1] = generator index of x_k^{(p+1)}, None if eliminated.
    let mut x_index: Vec<Vec<Option<usize>>> = Vec::new();

    for (p, &n) in blocks.iter().enumerate() {
        let mut row = Vec::new();
        for k in 1..=n {
            let top = k == n;
            if top && family == Family::A && p == l - 1 {
                // x_{n_l}^{(l)} = (prod_{q<l} x_{n_q}^{(q)})^{-1}; not a generator.
                row.push(None);
                continue;
            }
            row.push(Some(gens.len()));
            gens.push(Generator {
                name: format!("x{}_{}", k, p + 1),
                laurent: top,
                rank: binom_exact(n, k) as i64,
            });
        }
        x_index.push(row);
    }

    let mut y_index = Vec::new();
    let mut t_index = None;
    let mut z_index = Vec::new();
    match family {
        Family::A => {}
        Family::B => {
            for j in 1..m {
                y_index.push(gens.len());
                gens.push(Generator {
                    name: format!("y{}", j),
                    laurent: false,
                    rank: binom_exact(2 * m + 1, j) as i64,
                });
            }
            t_index = Some(gens.len());
            gens.push(Generator {
                name: "t".to_string(),
                laurent: false,
                rank: 1i64 << m,
            });
        }
        Family::C => {
            for j in 1..=m {
                z_index.push(gens.len());
                gens.push(Generator {
                    name: format!("z{}", j),
                    laurent: false,
                    rank: binom_exact(2 * m, j) as i64,
                });
            }
        }
    }

    let ngens = gens.len();
    let mut dual_images = vec![StarMonomial(vec![0; ngens]); ngens];

    for (p, &n) in blocks.iter().enumerate() {
        for k in 1..=n {
            let Some(idx) = x_index[p][(k - 1) as usize] else { continue };
            let img = &mut dual_images[idx].0;
            if k == n {
                // Top power is a determinant character: dual is its inverse.
                img[idx] = -1;
                continue;
            }
            // (x_k)* = x_{n-k} * x_n^{-1}, with x_n^{-1} expanded through the
            // product relation when the top power of the last A-block.
            img[x_index[p][(n - k - 1) as usize].unwrap()] += 1;
            match x_index[p][(n - 1) as usize] {
                Some(top) => img[top] -= 1,
                None => {
                    for (q, &nq) in blocks.iter().enumerate().take(l - 1) {
                        img[x_index[q][(nq - 1) as usize].unwrap()] += 1;
                    }
                }
            }
        }
    }
    for &j in &y_index {
        dual_images[j].0[j] = 1;
    }
    for &j in &z_index {
        dual_images[j].0[j] = 1;
    }
    if let Some(t) = t_index {
        dual_images[t].0[t] = 1;
        for (p, &n) in blocks.iter().enumerate() {
            dual_images[t].0[x_index[p][(n - 1) as usize].unwrap()] += 1;
        }
    }

    let square_rule = match (family, t_index) {
        (Family::B, Some(t)) if m == 0 => {
            let mut rule = vec![0i64; ngens];
            for (p, &n) in blocks.iter().enumerate() {
                rule[x_index[p][(n - 1) as usize].unwrap()] -= 1;
            }
            Some((t, rule))
        }
        _ => None,
    };

    let ring = StarRing {
        family,
        m,
        blocks: blocks.to_vec(),
        gens,
        dual_images,
        square_rule,
    };
    debug_assert!((0..ring.gens.len()).all(|i| {
        let g = ring.gen_monomial(i);
        ring.dual(&ring.dual(&g)) == g && ring.rank(&ring.dual(&g)) == ring.rank(&g)
    }));
    Ok(ring)
}

impl StarRing {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn spin_param(&self) -> u64 {
        self.m
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn one(&self) -> StarMonomial {
        StarMonomial(vec![0; self.gens.len()])
    }

    pub fn gen_monomial(&self, i: usize) -> StarMonomial {
        let mut e = vec![0; self.gens.len()];
        e[i] = 1;
        StarMonomial(e)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    fn normalize(&self, e: &mut [i64]) {
        if let Some((t, rule)) = &self.square_rule {
            while e[*t] >= 2 {
                e[*t] -= 2;
                for (slot, r) in e.iter_mut().zip(rule) {
                    *slot += r;
                }
            }
        }
        debug_assert!(self
            .gens
            .iter()
            .zip(e.iter())
            .all(|(g, &exp)| g.laurent || exp >= 0));
    }

    pub fn mul(&self, a: &StarMonomial, b: &StarMonomial) -> StarMonomial {
        let mut e: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.normalize(&mut e);
        StarMonomial(e)
    }

    /// The involution, extended multiplicatively to monomials.
    pub fn dual(&self, mono: &StarMonomial) -> StarMonomial {
        let mut e = vec![0i64; self.gens.len()];
        for (i, &exp) in mono.0.iter().enumerate() {
            if exp == 0 {
                continue;
            }
            for (slot, img) in e.iter_mut().zip(&self.dual_images[i].0) {
                *slot += exp * img;
            }
        }
        self.normalize(&mut e);
        StarMonomial(e)
    }

    /// Representation rank: product of generator ranks.  Laurent generators
    /// are rank-1 characters, so negative exponents still contribute 1.
    pub fn rank(&self, mono: &StarMonomial) -> i128 {
        let mut r: i128 = 1;
        for (g, &e) in self.gens.iter().zip(&mono.0) {
            if e < 0 {
                debug_assert_eq!(g.rank, 1);
                continue;
            }
            for _ in 0..e {
                r *= g.rank as i128;
            }
        }
        r
    }

    /// Total exponent over the non-Laurent generators; the canonical degree
    /// used for truncations.
    pub fn degree(&self, mono: &StarMonomial) -> u64 {
        self.gens
            .iter()
            .zip(&mono.0)
            .filter(|(g, _)| !g.laurent)
            .map(|(_, &e)| e as u64)
            .sum()
    }

    pub fn monomial_string(&self, mono: &StarMonomial) -> String {
        let mut parts = Vec::new();
        for (g, &e) in self.gens.iter().zip(&mono.0) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                _ => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// All self-dual monomials of degree <= bound, in (degree, exponent)
    /// order.  The duality acts on exponent vectors by a permutation of the
    /// non-Laurent part plus a Laurent offset linear in it, and inverts the
    /// Laurent part; so for each admissible non-Laurent vector there is at
    /// most one self-dual completion.
    pub fn self_dual_monomials(&self, bound: u64) -> Vec<StarMonomial> {
        let non_laurent: Vec<usize> = (0..self.gens.len())
            .filter(|&i| !self.gens[i].laurent)
            .collect();
        let mut out = Vec::new();
        let mut exps = vec![0i64; self.gens.len()];
        self.enumerate_self_dual(&non_laurent, 0, bound, &mut exps, &mut out);
        // Degree first, then earlier generators first.
        out.sort_by_key(|m| (self.degree(m), std::cmp::Reverse(m.0.clone())));
        out
    }

    fn enumerate_self_dual(
        &self,
        non_laurent: &[usize],
        pos: usize,
        budget: u64,
        exps: &mut Vec<i64>,
        out: &mut Vec<StarMonomial>,
    ) {
        if pos == non_laurent.len() {
            let candidate = StarMonomial(exps.clone());
            let image = self.dual(&candidate);
            for &i in non_laurent {
                if image.0[i] != candidate.0[i] {
                    return;
                }
            }
            let mut full = candidate;
            for (i, g) in self.gens.iter().enumerate() {
                if !g.laurent {
                    continue;
                }
                if image.0[i] % 2 != 0 {
                    return;
                }
                full.0[i] = image.0[i] / 2;
            }
            debug_assert_eq!(self.dual(&full), full);
            out.push(full);
            return;
        }
        let idx = non_laurent[pos];
        let cap = match &self.square_rule {
            Some((t, _)) if *t == idx => budget.min(1),
            _ => budget,
        };
        for e in 0..=cap {
            exps[idx] = e as i64;
            self.enumerate_self_dual(non_laurent, pos + 1, budget - e, exps, out);
        }
        exps[idx] = 0;
    }

    /// Self-dual monomial classes up to the bound.  The involution never
    /// introduces signs, so the minus part is empty.
    pub fn tate_classes(&self, bound: u64) -> TateClasses {
        TateClasses {
            plus_basis: self
                .self_dual_monomials(bound)
                .iter()
                .map(|m| self.monomial_string(m))
                .collect(),
            minus_basis: Vec::new(),
            bound,
        }
    }

    pub fn description(&self) -> RingDescription {
        RingDescription {
            family: self.family.as_str().to_string(),
            m: self.m,
            blocks: self.blocks.clone(),
            generators: self.gens.clone(),
            involution: self
                .gens
                .iter()
                .enumerate()
                .map(|(i, g)| InvolutionEntry {
                    gen: g.name.clone(),
                    image_monomial: self.monomial_string(&self.dual_images[i]),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct RingDescription {
    #[serde(rename = "type")]
    pub family: String,
    pub m: u64,
    pub blocks: Vec<u64>,
    pub generators: Vec<Generator>,
    pub involution: Vec<InvolutionEntry>,
}

#[derive(Serialize)]
pub struct InvolutionEntry {
    pub gen: String,
    pub image_monomial: String,
}

/// Generators of the positive Tate cohomology ring, with their degrees in the
/// self-dual monomial grading.  `root` is the extra square-root class (all
/// block sizes even) together with the right-hand side of its quadratic
/// relation.
pub struct TatePresentation {
    pub generators: Vec<(String, u64)>,
    pub root: Option<RootGenerator>,
}

pub struct RootGenerator {
    pub name: String,
    pub weight: u64,
    pub relation: String,
}

pub fn claimed_tate_presentation(ring: &StarRing) -> TatePresentation {
    let l = ring.blocks.len() as u64;
    let all_even = ring.blocks.iter().all(|&n| n % 2 == 0);
    let mut generators = Vec::new();
    for (p, &n) in ring.blocks.iter().enumerate() {
        for i in 1..=n / 2 {
            generators.push((format!("a{}_{}", i, p + 1), 2));
        }
    }
    let mut root = None;
    let middle_alphas = || {
        ring.blocks
            .iter()
            .enumerate()
            .map(|(p, &n)| format!("a{}_{}", n / 2, p + 1))
            .collect::<Vec<_>>()
            .join("*")
    };
    match ring.family {
        Family::A => {
            if all_even {
                root = Some(RootGenerator {
                    name: "e".to_string(),
                    weight: l,
                    relation: format!("e^2 + {}", middle_alphas()),
                });
            }
        }
        Family::B => {
            let m = ring.m;
            for j in 1..m {
                generators.push((format!("b{}", j), 1));
            }
            if m >= 1 {
                // beta_m lifts to t*t, a monomial of spin degree 2.
                generators.push((format!("b{}", m), 2));
            }
            if all_even {
                let betas: String = (1..=m).map(|j| format!(" + b{}", j)).collect();
                let alphas = if ring.blocks.is_empty() {
                    "1".to_string()
                } else {
                    middle_alphas()
                };
                root = Some(RootGenerator {
                    name: "d".to_string(),
                    weight: l + 1,
                    relation: format!("d^2 + (1{})*{}", betas, alphas),
                });
            }
        }
        Family::C => {
            for j in 1..=ring.m {
                generators.push((format!("g{}", j), 1));
            }
        }
    }
    TatePresentation { generators, root }
}

impl TatePresentation {
    pub fn render(&self) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|(n, w)| format!("{}:{}", n, w))
            .collect();
        match &self.root {
            None => format!("Z2[{}]", gens.join(", ")),
            Some(r) => format!(
                "Z2[{}] (x) Z2[{}:{}]/({})",
                gens.join(", "),
                r.name,
                r.weight,
                r.relation
            ),
        }
    }

    /// Monomial count per degree: free commutative monoid on the weighted
    /// generators, doubled by the root class when present.
    pub fn counts(&self, bound: u64) -> Vec<u64> {
        let n = bound as usize + 1;
        let mut ways = vec![0u64; n];
        ways[0] = 1;
        for &(_, w) in &self.generators {
            let w = w as usize;
            for d in w..n {
                ways[d] += ways[d - w];
            }
        }
        match &self.root {
            None => ways,
            Some(r) => (0..n)
                .map(|d| ways[d] + d.checked_sub(r.weight as usize).map_or(0, |s| ways[s]))
                .collect(),
        }
    }
}

pub struct TateReport {
    pub bound: u64,
    pub self_dual_counts: Vec<u64>,
    pub presented_counts: Vec<u64>,
    pub presentation: String,
    pub first_mismatch: Option<u64>,
}

impl TateReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Counts self-dual monomials degree by degree and compares against the
/// claimed positive-part presentation.  The classification results identify
/// the two as graded monoids, so equal counts at every degree up to the bound
/// is exactly what they assert on a truncation.
pub fn verify_tate_classification(ring: &StarRing, bound: u64) -> TateReport {
    let mut self_dual_counts = vec![0u64; bound as usize + 1];
    for m in ring.self_dual_monomials(bound) {
        self_dual_counts[ring.degree(&m) as usize] += 1;
    }
    let presentation = claimed_tate_presentation(ring);
    let presented_counts = presentation.counts(bound);
    let first_mismatch = (0..=bound).find(|&d| self_dual_counts[d as usize] != presented_counts[d as usize]);
    TateReport {
        bound,
        self_dual_counts,
        presented_counts,
        presentation: presentation.render(),
        first_mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monomial(ring: &StarRing, text: &str) -> StarMonomial {
        let mut e = vec![0i64; ring.generators().len()];
        if text != "1" {
            for part in text.split('*') {
                let (name, exp) = match part.split_once('^') {
                    Some((n, x)) => (n, x.parse::<i64>().unwrap()),
                    None => (part, 1),
                };
                e[ring.gen_index(name).unwrap()] += exp;
            }
        }
        StarMonomial(e)
    }

    #[test]
    fn type_a_generators_and_duality() {
        let ring = build_repring(Family::A, 0, &[3, 5]).unwrap();
        let names: Vec<&str> = ring.generators().iter().map(|g| g.name.as_str()).collect();
        // x5_2 is eliminated by the determinant relation.
        assert_eq!(
            names,
            ["x1_1", "x2_1", "x3_1", "x1_2", "x2_2", "x3_2", "x4_2"]
        );
        assert!(ring.generators()[2].laurent);
        assert!(!ring.generators()[3].laurent);
        let ranks: Vec<i64> = ring.generators().iter().map(|g| g.rank).collect();
        assert_eq!(ranks, [3, 3, 1, 5, 10, 10, 5]);

        let d = ring.dual(&monomial(&ring, "x1_1"));
        assert_eq!(ring.monomial_string(&d), "x2_1*x3_1^-1");
        // Last block: the eliminated top power re-enters as the product of
        // the other blocks' determinants.
        let d = ring.dual(&monomial(&ring, "x1_2"));
        assert_eq!(ring.monomial_string(&d), "x3_1*x4_2");
    }

    #[test]
    fn duality_is_an_involution() {
        let rings = [
            build_repring(Family::A, 0, &[3, 5]).unwrap(),
            build_repring(Family::A, 0, &[2, 2]).unwrap(),
            build_repring(Family::A, 0, &[1, 2]).unwrap(),
            build_repring(Family::B, 2, &[3, 5]).unwrap(),
            build_repring(Family::B, 0, &[2]).unwrap(),
            build_repring(Family::C, 2, &[2, 4]).unwrap(),
            build_repring(Family::C, 1, &[1]).unwrap(),
        ];
        for ring in &rings {
            let n = ring.generators().len();
            // All generators, their pairwise products, and a few Laurent twists.
            for i in 0..n {
                let g = ring.gen_monomial(i);
                assert_eq!(ring.dual(&ring.dual(&g)), g);
                for j in 0..n {
                    let mut p = ring.mul(&g, &ring.gen_monomial(j));
                    assert_eq!(ring.dual(&ring.dual(&p)), p);
                    for (k, gen) in ring.generators().iter().enumerate() {
                        if gen.laurent {
                            p.0[k] -= 2;
                        }
                    }
                    assert_eq!(ring.dual(&ring.dual(&p)), p);
                }
            }
            assert!(ring.dual(&ring.one()).is_one());
        }
    }

    #[test]
    fn rank_is_multiplicative_and_dual_invariant() {
        let ring = build_repring(Family::B, 2, &[3, 4]).unwrap();
        for i in 0..ring.generators().len() {
            let g = ring.gen_monomial(i);
            assert_eq!(ring.rank(&ring.dual(&g)), ring.rank(&g));
            for j in 0..ring.generators().len() {
                let h = ring.gen_monomial(j);
                assert_eq!(
                    ring.rank(&ring.mul(&g, &h)),
                    ring.rank(&g) * ring.rank(&h)
                );
            }
        }
        // Spin generator rank 2^m, exterior powers of the 2m+1 standard rep.
        let t = ring.gen_monomial(ring.gen_index("t").unwrap());
        assert_eq!(ring.rank(&t), 4);
        let y1 = ring.gen_monomial(ring.gen_index("y1").unwrap());
        assert_eq!(ring.rank(&y1), 5);
    }

    #[test]
    fn spin_square_rule() {
        let ring = build_repring(Family::B, 0, &[2]).unwrap();
        let t = ring.gen_monomial(ring.gen_index("t").unwrap());
        let sq = ring.mul(&t, &t);
        assert_eq!(ring.monomial_string(&sq), "x2_1^-1");
        // t* = t * x2_1, and squaring the dual folds back consistently.
        assert_eq!(ring.monomial_string(&ring.dual(&t)), "x2_1*t");
        let dsq = ring.mul(&ring.dual(&t), &ring.dual(&t));
        assert_eq!(ring.monomial_string(&dsq), "x2_1");
        assert_eq!(ring.dual(&sq), dsq);
    }

    #[test]
    fn self_dual_monomials_small_type_a() {
        // One odd and one even block: the classes are generated by
        // x1_2 * (x1_2)* = x1_1 * x1_2^2.
        let ring = build_repring(Family::A, 0, &[1, 2]).unwrap();
        let found: Vec<String> = ring
            .self_dual_monomials(2)
            .iter()
            .map(|m| ring.monomial_string(m))
            .collect();
        assert_eq!(found, ["1", "x1_1*x1_2^2"]);

        // Two even blocks: the square-root class shows up at degree l = 2.
        let ring = build_repring(Family::A, 0, &[2, 2]).unwrap();
        let found: Vec<String> = ring
            .self_dual_monomials(2)
            .iter()
            .map(|m| ring.monomial_string(m))
            .collect();
        assert!(found.contains(&"x1_1*x1_2".to_string()));
        for m in ring.self_dual_monomials(6) {
            assert_eq!(ring.dual(&m), m);
        }
    }

    #[test]
    fn bound_zero_gives_unit_only() {
        for ring in [
            build_repring(Family::A, 0, &[3, 5]).unwrap(),
            build_repring(Family::B, 1, &[2, 4]).unwrap(),
            build_repring(Family::C, 3, &[]).unwrap(),
        ] {
            let found = ring.self_dual_monomials(0);
            assert_eq!(found.len(), 1);
            assert!(found[0].is_one());
        }
    }

    #[test]
    fn self_dual_z_generators() {
        let ring = build_repring(Family::C, 2, &[1]).unwrap();
        let z2 = ring.gen_monomial(ring.gen_index("z2").unwrap());
        assert_eq!(ring.dual(&z2), z2);
        let found: Vec<String> = ring
            .self_dual_monomials(1)
            .iter()
            .map(|m| ring.monomial_string(m))
            .collect();
        assert_eq!(found, ["1", "z1", "z2"]);
    }

    #[test]
    fn classification_counts_match() {
        let cases: Vec<(Family, u64, Vec<u64>)> = vec![
            (Family::A, 0, vec![1, 2]),
            (Family::A, 0, vec![2, 2]),
            (Family::A, 0, vec![3, 5]),
            (Family::A, 0, vec![2, 4]),
            (Family::A, 0, vec![1, 1, 1]),
            (Family::A, 0, vec![6]),
            (Family::B, 0, vec![2]),
            (Family::B, 0, vec![3]),
            (Family::B, 2, vec![3, 5]),
            (Family::B, 1, vec![2, 4]),
            (Family::B, 3, vec![]),
            (Family::B, 0, vec![2, 2]),
            (Family::C, 1, vec![1]),
            (Family::C, 2, vec![2, 4]),
            (Family::C, 2, vec![]),
            (Family::C, 0, vec![3, 3]),
        ];
        for (family, m, blocks) in cases {
            let ring = build_repring(family, m, &blocks).unwrap();
            let report = verify_tate_classification(&ring, 6);
            assert!(
                report.pass(),
                "{:?} m={} blocks={:?}: self-dual {:?} vs presented {:?} ({})",
                family,
                m,
                blocks,
                report.self_dual_counts,
                report.presented_counts,
                report.presentation
            );
        }
    }

    #[test]
    fn classification_reports_presentations() {
        let ring = build_repring(Family::A, 0, &[2, 2]).unwrap();
        let report = verify_tate_classification(&ring, 4);
        assert_eq!(
            report.presentation,
            "Z2[a1_1:2, a1_2:2] (x) Z2[e:2]/(e^2 + a1_1*a1_2)"
        );
        let ring = build_repring(Family::C, 1, &[1]).unwrap();
        let report = verify_tate_classification(&ring, 4);
        assert_eq!(report.presentation, "Z2[g1:1]");
    }

    #[test]
    fn minus_part_is_empty() {
        for ring in [
            build_repring(Family::A, 0, &[2, 3]).unwrap(),
            build_repring(Family::B, 1, &[2]).unwrap(),
            build_repring(Family::C, 2, &[4]).unwrap(),
        ] {
            let classes = ring.tate_classes(5);
            assert!(classes.minus_basis.is_empty());
            assert_eq!(classes.bound, 5);
            assert_eq!(classes.plus_basis[0], "1");
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(build_repring(Family::A, 0, &[]).is_err());
        assert!(build_repring(Family::A, 1, &[2]).is_err());
        assert!(build_repring(Family::B, 0, &[]).is_err());
        assert!(build_repring(Family::C, 0, &[]).is_err());
        assert!(build_repring(Family::C, 1, &[0]).is_err());
    }

    #[test]
    fn json_description() {
        let ring = build_repring(Family::B, 0, &[2]).unwrap();
        let value = serde_json::to_value(ring.description()).unwrap();
        assert_eq!(value["type"], "B");
        assert_eq!(value["blocks"][0], 2);
        assert_eq!(value["generators"][0]["name"], "x1_1");
        assert_eq!(value["generators"][1]["laurent"], true);
        let entries = value["involution"].as_array().unwrap();
        assert!(entries
            .iter()
            .any(|e| e["gen"] == "t" && e["image_monomial"] == "x2_1*t"));
    }
}
