//! Verification suites shared by the command-line front end and the
//! integration tests: the frozen worked examples, the combinatorial lemma
//! witnesses, the series kernel identities, the closed-form rank tables,
//! the batch presentation tables, and the Tate classification counts.
//!
//! Every suite returns a report with one pass/fail line per item; items
//! aggregate over their parameter range and report the first failure.

use serde::Serialize;

use crate::f2poly::Poly2;
use crate::relations::{mu_family, nu_family, xi_family, RelationFamily};
use crate::series::{kernel_family, psi, reflection_member, verify_kernel, verify_recursion_step, RationalSeries};
use crate::star::lemmas::tate_lemma_suite;
use crate::star::{build_repring, verify_tate_classification, Family};
use crate::witt::ranks::{brute_exterior_ranks, exterior_ranks, table_ranks, RankTable};
use crate::witt::{partitions, rank_table, FlagType, Structure};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport { suite: suite.to_string(), items: Vec::new() }
    }

    /// Ok carries a short success note, Err the first failure.
    fn push(&mut self, name: &str, outcome: Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.items.push(SuiteItem { name: name.to_string(), passed, detail });
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> usize {
        self.items.iter().filter(|i| !i.passed).count()
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for item in &self.items {
            let mark = if item.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("{mark} [{}] {} - {}\n", self.suite, item.name, item.detail));
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!(
            "suite {}: {verdict} ({}/{} items)\n",
            self.suite,
            self.items.len() - self.failures(),
            self.items.len()
        ));
        s
    }
}

fn parse(f: &RelationFamily, text: &str) -> Poly2 {
    Poly2::parse(f.ring(), text).expect("frozen example text parses")
}

/// Block multisets (non-increasing) with sum of floor(n_i/2) at most
/// `half_bound` and at most `max_blocks` parts. Size-1 blocks do not move
/// the half-sum, so the block count cap keeps the range finite.
pub fn mu_range(half_bound: u64, max_blocks: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for total in 1..=(2 * half_bound + max_blocks as u64) {
        for part in partitions(total) {
            if part.len() <= max_blocks
                && part.iter().map(|&b| b / 2).sum::<u64>() <= half_bound
            {
                out.push(part);
            }
        }
    }
    out
}

/// Spin parameter tuples (m, blocks) with floor(m/2) + sum floor(n_i/2)
/// at most `half_bound`, m at most `max_spin`, at most `max_blocks`
/// blocks; m = 0 with no blocks is excluded.
pub fn spin_range(half_bound: u64, max_spin: u64, max_blocks: usize) -> Vec<(u64, Vec<u64>)> {
    let mut out = Vec::new();
    for m in 0..=max_spin {
        if m / 2 > half_bound {
            continue;
        }
        if m > 0 {
            out.push((m, Vec::new()));
        }
        let rest = half_bound - m / 2;
        for blocks in mu_range(rest, max_blocks) {
            out.push((m, blocks));
        }
    }
    out
}

/// The three frozen worked examples: the mu family of (3,5), and the nu
/// and xi families at m = 2 over the same blocks, member by member.
pub fn examples_suite() -> SuiteReport {
    let mut report = SuiteReport::new("examples");

    let mu = mu_family(&[3, 5]);
    let mu_texts =
        ["1", "b1_1 + b1_2", "b1_1 + b1_1*b1_2 + b2_2", "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2"];
    report.push("mu(3,5) members", {
        let mut err = None;
        for (k, text) in mu_texts.iter().enumerate() {
            if mu.member(k) != &parse(&mu, text) {
                err = Some(format!("mu_{k} is {}", mu.member(k)));
                break;
            }
        }
        if mu.member(4) != &Poly2::zero(mu.ring()) {
            err = err.or_else(|| Some(format!("mu_4 is {}, expected 0", mu.member(4))));
        }
        match err {
            None => Ok("mu_0..mu_4 match, including mu_4 = 0".into()),
            Some(e) => Err(e),
        }
    });
    report.push(
        "mu(3,5) canonical term order",
        if mu.member(3).to_string() == "b1_1*b2_2 + b1_1*b1_2 + b2_2 + 1" {
            Ok("descending weighted order".into())
        } else {
            Err(format!("mu_3 renders as {}", mu.member(3)))
        },
    );
    report.push(
        "mu(3,5) basis",
        if mu.basis_set() == [1, 2, 3] {
            Ok("basis {1, 2, 3}".into())
        } else {
            Err(format!("basis {:?}", mu.basis_set()))
        },
    );

    // The spin families convolve the same mu polynomials against the spin
    // chain; the expected members are assembled from the frozen mu texts.
    let mu1 = "b1_1 + b1_2";
    let mu2 = "b1_1 + b1_1*b1_2 + b2_2";
    let mu3 = "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2";

    let nu = nu_family(2, &[3, 5]);
    {
        let e = |t: &str| parse(&nu, t);
        let x = |a: &str, t: &str| &parse(&nu, a) * &parse(&nu, t);
        let expected: Vec<Poly2> = vec![
            e("a1"),
            &e("a2") + &e(mu1),
            &e("a1") + &x("a1", mu1),
            &(&e("1") + &x("a2", mu1)) + &(&e(mu2) + &e("1")),
            &x("a1", mu1) + &x("a1", mu2),
            &(&e(mu1) + &x("a2", mu2)) + &e(mu3),
            &x("a1", mu2) + &x("a1", mu3),
            &e(mu2) + &x("a2", mu3),
            x("a1", mu3),
            Poly2::zero(nu.ring()),
        ];
        report.push("nu(2,(3,5)) members", {
            match (1..=10).find(|&k| nu.member(k) != &expected[k - 1]) {
                None => Ok("nu_1..nu_10 match after cancellation".into()),
                Some(k) => Err(format!("nu_{k} is {}", nu.member(k))),
            }
        });
    }
    report.push(
        "nu(2,(3,5)) basis and dimension",
        match nu.quotient_dimension() {
            Ok(12) if nu.basis_set() == [1, 2, 4, 6, 8] => {
                Ok("basis {1, 2, 4, 6, 8}, dimension 12".into())
            }
            Ok(d) => Err(format!("dimension {d}, basis {:?}", nu.basis_set())),
            Err(e) => Err(e),
        },
    );
    report.push("nu(2,(3,5)) surplus reductions", {
        match nu.reduce_surplus() {
            Err(e) => Err(e),
            Ok(reds) => {
                let indices: Vec<usize> = reds.iter().map(|r| r.index).collect();
                let nu3 = reds.iter().find(|r| r.index == 3);
                let nu3_ok = nu3.is_some_and(|r| {
                    r.combination.len() == 1
                        && r.combination[0].0 == 1
                        && r.combination[0].1 == parse(&nu, "1 + b1_1 + b1_2")
                });
                if indices == [3, 5, 7, 9, 10] && nu3_ok {
                    Ok("indices {3, 5, 7, 9, 10}; nu_3 = (1 + mu_1) nu_1".into())
                } else {
                    Err(format!("indices {indices:?}"))
                }
            }
        }
    });

    let xi = xi_family(2, &[3, 5]);
    {
        let e = |t: &str| parse(&xi, t);
        let x = |a: &str, t: &str| &parse(&xi, a) * &parse(&xi, t);
        let expected: Vec<Poly2> = vec![
            e("a1 + 1"),
            &e("a2") + &e(mu1),
            &e("a2") + &x("a1", mu1),
            &(&e("a1") + &x("a2", mu1)) + &(&e(mu2) + &e("1")),
            &x("a2", mu1) + &x("a1", mu2),
            &(&x("a1", mu1) + &x("a2", mu2)) + &e(mu3),
            &(&e(mu1) + &x("a2", mu2)) + &x("a1", mu3),
            &x("a1", mu2) + &x("a2", mu3),
            &e(mu2) + &x("a2", mu3),
            &x("a1", mu3) + &e(mu3),
        ];
        report.push("xi(2,(3,5)) members", {
            match (1..=10).find(|&k| xi.member(k) != &expected[k - 1]) {
                None => Ok("xi_1..xi_10 match after cancellation".into()),
                Some(k) => Err(format!("xi_{k} is {}", xi.member(k))),
            }
        });
    }
    report.push(
        "xi(2,(3,5)) dimension and reductions",
        match (xi.quotient_dimension(), xi.reduce_surplus()) {
            (Ok(12), Ok(reds)) => Ok(format!("dimension 12, {} reductions", reds.len())),
            (Ok(d), _) => Err(format!("dimension {d}")),
            (Err(e), _) => Err(e),
        },
    );

    report
}

/// The six constructed witnesses for the Tate cohomology lemmas.
pub fn lemmas_suite() -> SuiteReport {
    let mut report = SuiteReport::new("lemmas");
    for check in tate_lemma_suite().checks {
        report.push(
            check.rule,
            if check.pass {
                Ok(format!("{} ({})", check.witness, check.detail))
            } else {
                Err(format!("{}: {}", check.witness, check.detail))
            },
        );
    }
    report
}

/// Series kernel identities over all mu rings with half-sum at most
/// `half_bound`: the systematic members and short reflections vanish with
/// triangular leading exponents, the long reflections t^-s + t^(s+k)
/// vanish for s <= 8, and the one-block recursion step holds on sample
/// series.
pub fn series_suite(half_bound: u64) -> SuiteReport {
    let mut report = SuiteReport::new("series");
    let families = mu_range(half_bound, 6);

    report.push("systematic kernel members", {
        let mut checked = 0usize;
        let mut err = None;
        for blocks in &families {
            let fam = mu_family(blocks);
            match verify_kernel(&fam) {
                Ok(r) => checked += r.members_checked,
                Err(e) => {
                    err = Some(format!("blocks {blocks:?}: {e}"));
                    break;
                }
            }
        }
        match err {
            None => Ok(format!("{} members over {} families", checked, families.len())),
            Some(e) => Err(e),
        }
    });

    report.push("reflection members up to s = 8", {
        let mut err = None;
        'outer: for blocks in &families {
            let fam = mu_family(blocks);
            let k = fam.odd_block_count();
            for s in 0..=8 {
                let image = psi(&reflection_member(k, s), &fam);
                if !image.is_zero() {
                    err = Some(format!("blocks {blocks:?}, s = {s}: image {image}"));
                    break 'outer;
                }
            }
        }
        match err {
            None => Ok(format!("s = 0..8 over {} families", families.len())),
            Some(e) => Err(e),
        }
    });

    report.push("recursion step", {
        // The step removes the last (odd) block, so two blocks at least.
        let samples: &[&[u64]] = &[&[1, 1], &[2, 3], &[3, 3], &[2, 2, 3], &[1, 1, 1]];
        let mut checked = 0usize;
        let mut err = None;
        'outer: for blocks in samples {
            let fam = mu_family(blocks);
            let mut qs: Vec<RationalSeries> = kernel_family(fam.odd_block_count());
            qs.push(RationalSeries::monomial(0));
            qs.push(RationalSeries::monomial(1));
            qs.push(RationalSeries::laurent(&[-2, 5]));
            for q in &qs {
                if let Err(e) = verify_recursion_step(q, &fam) {
                    err = Some(format!("blocks {blocks:?}, series {q}: {e}"));
                    break 'outer;
                }
                checked += 1;
            }
        }
        match err {
            None => Ok(format!("{checked} instances")),
            Some(e) => Err(e),
        }
    });

    report
}

/// Closed-form exterior ranks against the brute-force expansion for all
/// f + g <= max_size, the frozen printed rows, and the two residue tables.
pub fn appendix_suite(max_size: u64) -> SuiteReport {
    let mut report = SuiteReport::new("appendix");

    report.push("closed form equals expansion", {
        let mut residues = [[false; 4]; 4];
        let mut err = None;
        'outer: for f in 0..=max_size {
            for g in 0..=(max_size - f) {
                if exterior_ranks(f, g) != brute_exterior_ranks(f, g) {
                    err = Some(format!("mismatch at ({f}, {g})"));
                    break 'outer;
                }
                residues[(f % 4) as usize][(g % 4) as usize] = true;
            }
        }
        let covered = residues.iter().flatten().filter(|&&b| b).count();
        match err {
            None if covered == 16 => Ok(format!("all f + g <= {max_size}, 16 residue classes")),
            None => Err(format!("only {covered} of 16 residue classes covered")),
            Some(e) => Err(e),
        }
    });

    report.push("printed rows", {
        let rows: &[(u64, u64, [u64; 4])] = &[
            (0, 0, [1, 0, 0, 0]),
            (1, 0, [1, 1, 0, 0]),
            (0, 1, [1, 0, 0, 1]),
            (1, 1, [2, 1, 0, 1]),
            (2, 0, [1, 2, 1, 0]),
            (4, 0, [2, 4, 6, 4]),
        ];
        match rows.iter().find(|&&(f, g, d)| exterior_ranks(f, g).dims != d) {
            None => Ok(format!("{} rows", rows.len())),
            Some((f, g, _)) => Err(format!("row ({f}, {g}) is {}", exterior_ranks(*f, *g))),
        }
    });

    report.push("residue tables", {
        let mut err = None;
        for r in 0..=max_size {
            if table_ranks(RankTable::Plain, r) != exterior_ranks(r, 0) {
                err = Some(format!("plain table at r = {r}"));
                break;
            }
            if r >= 1 && table_ranks(RankTable::Twisted, r) != exterior_ranks(r - 1, 1) {
                err = Some(format!("twisted table at r = {r}"));
                break;
            }
        }
        match err {
            None => Ok(format!("both tables through r = {max_size}")),
            Some(e) => Err(e),
        }
    });

    report
}

/// Batch presentations for every covered parameter tuple with n <= max_n:
/// no check failures, and each emitted ring row's ranks re-derive from
/// the exterior degrees and the scalar.
pub fn tables_suite(max_n: u64) -> SuiteReport {
    let mut report = SuiteReport::new("tables");
    for flag_type in [FlagType::A, FlagType::B, FlagType::C, FlagType::D] {
        let rows = rank_table(flag_type, max_n);
        let name = format!("type {flag_type} rows (n <= {max_n})");
        let mut additive = 0usize;
        let mut err = None;
        for row in &rows {
            let p = match &row.outcome {
                Ok(p) => p,
                Err(e) => {
                    err = Some(format!("m = {}, blocks {:?}: {e}", row.m, row.blocks));
                    break;
                }
            };
            if p.structure == Structure::AdditiveOnly {
                additive += 1;
                continue;
            }
            let f = p.exterior_generators.iter().filter(|g| g.degree == -1).count() as u64;
            let g = p.exterior_generators.iter().filter(|g| g.degree == -3).count() as u64;
            let expected = exterior_ranks(f, g).scaled(p.scalar_a);
            if p.ranks != expected {
                err = Some(format!(
                    "m = {}, blocks {:?}: ranks {} vs {expected}",
                    row.m, row.blocks, p.ranks
                ));
                break;
            }
            if p.ranks.total() != p.scalar_a << p.exterior_generators.len() {
                err = Some(format!("m = {}, blocks {:?}: total rank", row.m, row.blocks));
                break;
            }
        }
        let outcome = match err {
            None if additive > 0 => {
                Ok(format!("{} rows, {additive} additive-only", rows.len()))
            }
            None => Ok(format!("{} rows", rows.len())),
            Some(e) => Err(e),
        };
        report.push(&name, outcome);
    }
    report
}

/// Regularity and quotient dimension over the full certified ranges: mu
/// families with half-sum <= mu_half, nu and xi families with spin
/// half-sum <= spin_half.
pub fn regularity_suite(mu_half: u64, spin_half: u64) -> SuiteReport {
    let mut report = SuiteReport::new("regularity");
    let mu_families = mu_range(mu_half, 6);
    report.push("mu families", {
        run_family_checks(mu_families.iter().map(|b| (0u64, b.clone(), mu_family(b))), false)
    });
    let spin = spin_range(spin_half, 9, 6);
    report.push("nu families", {
        run_family_checks(spin.iter().map(|(m, b)| (*m, b.clone(), nu_family(*m, b))), false)
    });
    report.push("xi families", {
        run_family_checks(spin.iter().map(|(m, b)| (*m, b.clone(), xi_family(*m, b))), false)
    });
    report
}

/// Surplus reductions over the same ranges: every non-basis member must
/// reduce to an explicit, substitution-verified combination.
pub fn reduction_suite(mu_half: u64, spin_half: u64) -> SuiteReport {
    let mut report = SuiteReport::new("reductions");
    let mu_families = mu_range(mu_half, 6);
    report.push("mu families", {
        run_family_checks(mu_families.iter().map(|b| (0u64, b.clone(), mu_family(b))), true)
    });
    let spin = spin_range(spin_half, 9, 6);
    report.push("nu families", {
        run_family_checks(spin.iter().map(|(m, b)| (*m, b.clone(), nu_family(*m, b))), true)
    });
    report.push("xi families", {
        run_family_checks(spin.iter().map(|(m, b)| (*m, b.clone(), xi_family(*m, b))), true)
    });
    report
}

fn run_family_checks(
    families: impl Iterator<Item = (u64, Vec<u64>, RelationFamily)>,
    reductions: bool,
) -> Result<String, String> {
    let mut count = 0usize;
    let mut reduced = 0usize;
    for (m, blocks, fam) in families {
        let label = || format!("m = {m}, blocks {blocks:?}");
        if reductions {
            match fam.reduce_surplus() {
                Ok(reds) => reduced += reds.len(),
                Err(e) => return Err(format!("{}: {e}", label())),
            }
        } else {
            let reg = fam.verify_regularity();
            if !reg.verdict.is_regular() {
                return Err(format!("{}: not regular ({})", label(), reg.notes.join("; ")));
            }
            if let Err(e) = fam.quotient_dimension() {
                return Err(format!("{}: {e}", label()));
            }
        }
        count += 1;
    }
    if reductions {
        Ok(format!("{count} families, {reduced} reductions verified"))
    } else {
        Ok(format!("{count} families regular with matching dimension"))
    }
}

/// Tate classification counts at the degree bound for representation
/// rings of all three families over small parameters.
pub fn classification_suite(bound: u64) -> SuiteReport {
    let mut report = SuiteReport::new("classification");

    report.push("type A rings", {
        let mut checked = 0usize;
        let mut err = None;
        'outer: for total in 1..=6u64 {
            for blocks in partitions(total) {
                match build_repring(Family::A, 0, &blocks) {
                    Err(e) => {
                        err = Some(format!("blocks {blocks:?}: {e}"));
                        break 'outer;
                    }
                    Ok(ring) => {
                        let r = verify_tate_classification(&ring, bound);
                        if !r.pass() {
                            err = Some(format!(
                                "blocks {blocks:?}: mismatch at degree {:?}",
                                r.first_mismatch
                            ));
                            break 'outer;
                        }
                        checked += 1;
                    }
                }
            }
        }
        match err {
            None => Ok(format!("{checked} rings, both total parities")),
            Some(e) => Err(e),
        }
    });

    for (family, name) in [(Family::B, "type B rings"), (Family::C, "type C rings")] {
        report.push(name, {
            let mut checked = 0usize;
            let mut err = None;
            'outer: for m in 0..=4u64 {
                for rest in 0..=(5 - m) {
                    let tuples: Vec<Vec<u64>> = if rest == 0 {
                        if m == 0 {
                            continue;
                        }
                        vec![Vec::new()]
                    } else {
                        partitions(rest)
                    };
                    for blocks in tuples {
                        match build_repring(family, m, &blocks) {
                            Err(e) => {
                                err = Some(format!("m = {m}, blocks {blocks:?}: {e}"));
                                break 'outer;
                            }
                            Ok(ring) => {
                                let r = verify_tate_classification(&ring, bound);
                                if !r.pass() {
                                    err = Some(format!(
                                        "m = {m}, blocks {blocks:?}: mismatch at degree {:?}",
                                        r.first_mismatch
                                    ));
                                    break 'outer;
                                }
                                checked += 1;
                            }
                        }
                    }
                }
            }
            match err {
                None => Ok(format!("{checked} rings")),
                Some(e) => Err(e),
            }
        });
    }

    report
}

/// The named suites of the verify verb. `max_size` feeds the appendix
/// bound; the other suites run at their standard bounds.
pub fn suites_by_name(name: &str, max_size: u64) -> Option<Vec<SuiteReport>> {
    match name {
        "examples" => Some(vec![examples_suite()]),
        "lemmas" => Some(vec![lemmas_suite()]),
        "series" => Some(vec![series_suite(4)]),
        "appendix" => Some(vec![appendix_suite(max_size)]),
        "tables" => Some(vec![tables_suite(6)]),
        "all" => Some(vec![
            examples_suite(),
            lemmas_suite(),
            series_suite(4),
            appendix_suite(max_size),
            tables_suite(6),
        ]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_pass() {
        let report = examples_suite();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.items.len(), 8);
    }

    #[test]
    fn lemmas_pass() {
        let report = lemmas_suite();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.items.len(), 6);
    }

    #[test]
    fn appendix_passes_at_small_bound() {
        let report = appendix_suite(8);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn series_passes_at_small_bound() {
        let report = series_suite(2);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn tables_pass_at_small_bound() {
        let report = tables_suite(4);
        assert!(report.passed(), "{}", report.render_text());
        // The type D item must see the additive-only row at (2, (2)).
        let d_item = report.items.iter().find(|i| i.name.contains("type D")).unwrap();
        assert!(d_item.detail.contains("additive-only"), "{}", d_item.detail);
    }

    #[test]
    fn classification_passes_at_small_bound() {
        let report = classification_suite(4);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn ranges_are_bounded_and_nonempty() {
        let mu = mu_range(2, 4);
        assert!(mu.contains(&vec![2, 2]));
        assert!(mu.contains(&vec![1, 1, 1]));
        assert!(mu.contains(&vec![3, 3]));
        assert!(!mu.contains(&vec![4, 2]));
        assert!(mu.iter().all(|b| b.len() <= 4));

        let spin = spin_range(1, 3, 2);
        assert!(spin.contains(&(2, vec![1])));
        assert!(spin.contains(&(1, vec![2])));
        assert!(spin.contains(&(1, vec![])));
        assert!(!spin.contains(&(2, vec![2])));
        assert!(!spin.contains(&(0, vec![])));
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(suites_by_name("nonsense", 10).is_none());
        assert_eq!(suites_by_name("all", 10).unwrap().len(), 5);
    }
}
