//! Acceptance battery: one line per criterion, exact checks plus a wall-clock budget.

use std::time::{Duration, Instant};

use treegroups::suites::{run_suite, Suite, SuiteOptions};

struct Criterion {
    id: &'static str,
    title: &'static str,
    suite: Suite,
    budget: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: "AC1", title: "quasi-Lie short exact sequence, k in {1,2}, m in {2,3}", suite: Suite::QuasiExact, budget: secs(120) },
    Criterion { id: "AC2", title: "tree group torsion parity, n <= 3, m <= 3", suite: Suite::TorsionParity, budget: secs(300) },
    Criterion { id: "AC3", title: "eta' isomorphism in order 2, m in {2,3}", suite: Suite::EtaEvenIso, budget: secs(120) },
    Criterion { id: "AC4", title: "two presentations of T~ agree, orders 1 and 3", suite: Suite::TtildeIso, budget: secs(600) },
    Criterion { id: "AC5", title: "top sequence exact at order 3, rank D_3", suite: Suite::TopSequence, budget: secs(600) },
    Criterion { id: "AC6", title: "sl(1/2 eta(J-J)) = J for rooted J of order <= 2", suite: Suite::SlRoundtrip, budget: secs(120) },
    Criterion { id: "AC7", title: "bracket(eta(t)) = 0 for trees of order <= 3", suite: Suite::EtaMembership, budget: secs(120) },
    Criterion { id: "AC8", title: "clasper commutator classes", suite: Suite::Clasper, budget: secs(1) },
    Criterion { id: "AC9", title: "Magnus homomorphism and Borromean Artin data", suite: Suite::Magnus, budget: secs(30) },
    Criterion { id: "AC10", title: "presentation ranks of L_n(m) match Witt", suite: Suite::Witt, budget: secs(60) },
];

#[test]
fn acceptance() {
    let opts = SuiteOptions::default();
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let report = run_suite(c.suite, &opts);
        let elapsed = start.elapsed();
        let (ok, lines) = match &report {
            Ok(r) => (
                r.passed(),
                r.checks
                    .iter()
                    .map(|k| {
                        let mut s = format!("    [{}] {}: {}", if k.passed { "ok" } else { "FAIL" }, k.name, k.detail);
                        if let Some(w) = &k.witness {
                            s.push_str(&format!(" (witness: {w})"));
                        }
                        s
                    })
                    .collect(),
                ),
            Err(e) => (false, vec![format!("    error: {e}")]),
        };
        let in_budget = elapsed <= c.budget;
        let pass = ok && in_budget;
        println!(
            "{} {}: {} [exact; {:.2?} of {:?} budget]",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            elapsed,
            c.budget
        );
        for l in lines {
            println!("{l}");
        }
        if !pass {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
