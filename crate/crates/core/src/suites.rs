//! Verification suites shared by the command line and the test harness.
//!
//! Each suite runs a fixed battery of exact checks and reports one line per
//! check, with a witness when a check fails.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::abelian::verify_short_exact;
use crate::error::{Error, Result};
use crate::lie::{witt_rank, BracketRing, FreeLie, LieSystem};
use crate::nilpotent::{
    artin, clasper_commutator, johnson_order, magnus, milnor_first_nonvanishing,
    twisted_clasper_commutator, GroupWord, JohnsonOrder,
};
use crate::tree_groups::{
    bracket_map, compare_presentations, d_group, d_group_quasi, eta, eta_hom, half_eta_doubled, sl_map,
    tree_group, verify_top_sequence, InftyOptions,
};
use crate::trees::{enumerate_trees, parse_rooted, parse_tree, sorted_rooted_trees, Alphabet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    QuasiExact,
    TorsionParity,
    EtaEvenIso,
    TtildeIso,
    TopSequence,
    SlRoundtrip,
    EtaMembership,
    Clasper,
    Magnus,
    Witt,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::QuasiExact,
        Suite::TorsionParity,
        Suite::EtaEvenIso,
        Suite::TtildeIso,
        Suite::TopSequence,
        Suite::SlRoundtrip,
        Suite::EtaMembership,
        Suite::Clasper,
        Suite::Magnus,
        Suite::Witt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::QuasiExact => "quasi-exact",
            Suite::TorsionParity => "torsion-parity",
            Suite::EtaEvenIso => "eta-even-iso",
            Suite::TtildeIso => "ttilde-iso",
            Suite::TopSequence => "top-sequence",
            Suite::SlRoundtrip => "sl-roundtrip",
            Suite::EtaMembership => "eta-membership",
            Suite::Clasper => "clasper",
            Suite::Magnus => "magnus",
            Suite::Witt => "witt",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by all suites; the defaults reproduce the full battery.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    /// Restrict to these strand counts (empty: suite default).
    pub strands: Vec<u32>,
    pub include_2jinf: bool,
    pub tree_cap: usize,
    pub seed: u64,
    pub magnus_pairs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            strands: Vec::new(),
            include_2jinf: false,
            tree_cap: crate::trees::DEFAULT_TREE_CAP,
            seed: 0x5eed,
            magnus_pairs: 1000,
        }
    }
}

impl SuiteOptions {
    fn strands(&self, default: &[u32]) -> Vec<u32> {
        if self.strands.is_empty() {
            default.to_vec()
        } else {
            default.iter().copied().filter(|m| self.strands.contains(m)).collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
            witness: None,
        }
    }

    fn witness(mut self, w: Option<String>) -> Self {
        self.witness = w;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::QuasiExact => quasi_exact(opts)?,
        Suite::TorsionParity => torsion_parity(opts)?,
        Suite::EtaEvenIso => eta_even_iso(opts)?,
        Suite::TtildeIso => ttilde_iso(opts)?,
        Suite::TopSequence => top_sequence(opts)?,
        Suite::SlRoundtrip => sl_roundtrip(opts)?,
        Suite::EtaMembership => eta_membership(opts)?,
        Suite::Clasper => clasper()?,
        Suite::Magnus => magnus_suite(opts)?,
        Suite::Witt => witt(opts)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn torsion_strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn quasi_exact(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in opts.strands(&[2, 3]) {
        let sys = LieSystem::new(Alphabet::Strands(m));
        for k in [1usize, 2] {
            let name = format!("0 -> Z2 (x) L_{k}({m}) -> L'_{}({m}) -> L_{}({m}) -> 0", 2 * k, 2 * k);
            let ex = verify_short_exact(&sys.sq_hom(k)?, &sys.projection_hom(2 * k)?)?;
            let g = sys.quasi.group(2 * k);
            let want_rank = witt_rank(2 * k as u32, m as u64) as usize;
            let want_torsion = witt_rank(k as u32, m as u64) as usize;
            let t = g.torsion();
            let shape = g.free_rank() == want_rank && t.len() == want_torsion && t.iter().all(|x| *x == BigInt::from(2));
            let witness = ex
                .junctions
                .iter()
                .find_map(|j| j.witness.as_ref().map(|w| format!("junction {}: [{}]", j.index, w.join(","))));
            out.push(
                Check::new(
                    name,
                    ex.passed() && shape,
                    format!(
                        "L' = {}, expected {}, exact: {}",
                        g.describe(),
                        describe_invariants(want_rank, &vec![2; want_torsion]),
                        ex.passed()
                    ),
                )
                .witness(witness),
            );
        }
    }
    Ok(out)
}

fn torsion_parity(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in opts.strands(&[1, 2, 3]) {
        for n in 0..=3usize {
            let t = tree_group(n, Alphabet::Strands(m), opts.tree_cap)?;
            let torsion = t.group().torsion();
            let ok = if n % 2 == 1 {
                torsion.iter().all(|x| *x == BigInt::from(2))
            } else {
                torsion.is_empty()
            };
            let witness = (!ok).then(|| format!("torsion [{}]", torsion_strings(&torsion).join(",")));
            out.push(
                Check::new(format!("T_{n}({m})"), ok, t.group().describe()).witness(witness),
            );
        }
    }
    Ok(out)
}

fn eta_even_iso(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in opts.strands(&[2, 3]) {
        let name = format!("eta'_2: T_2({m}) -> D'_2({m})");
        let sys = LieSystem::new(Alphabet::Strands(m));
        let t = tree_group(2, Alphabet::Strands(m), opts.tree_cap)?;
        let d = d_group_quasi(2, &sys)?;
        match eta_hom(&t, &d, &sys) {
            Ok(h) => {
                let c = h.certify();
                let detail = format!(
                    "T_2 = {}, D'_2 = {}, injective {}, surjective {}",
                    t.group().describe(),
                    d.group().describe(),
                    c.injective,
                    c.surjective
                );
                let witness = (!c.injective).then(|| format!("kernel {}", c.kernel.group().describe()));
                out.push(Check::new(name, c.injective && c.surjective, detail).witness(witness));
            }
            Err(Error::RelatorViolation { index, residue }) => out.push(
                Check::new(name, false, "not well defined")
                    .witness(Some(format!("relator {index} maps to [{}]", residue.join(",")))),
            ),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn ttilde_iso(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let cases: Vec<(usize, u32)> = [(1, 1), (1, 2), (1, 3), (3, 2), (3, 3)]
        .into_iter()
        .filter(|&(_, m)| opts.strands(&[1, 2, 3]).contains(&m))
        .collect();
    for (order, m) in cases {
        let mut reports = Vec::new();
        for flag in [false, true] {
            let o = InftyOptions {
                include_2jinf: flag,
                boundary_twists: true,
            };
            reports.push(compare_presentations(order, Alphabet::Strands(m), o, opts.tree_cap)?);
        }
        let chosen = &reports[usize::from(opts.include_2jinf)];
        let same = reports[0].presented.free_rank == reports[1].presented.free_rank
            && reports[0].presented.torsion == reports[1].presented.torsion;
        let detail = format!(
            "quotient {} / inf-presentation {}; 2J^inf relators {}",
            describe_report(&chosen.quotient),
            describe_report(&chosen.presented),
            if same { "redundant" } else { "change the group" }
        );
        out.push(
            Check::new(format!("T~_{order}({m}) presentations"), chosen.isomorphic(), detail)
                .witness(chosen.failure.clone()),
        );
    }
    if opts.strands(&[2]).contains(&2) {
        let o = InftyOptions {
            include_2jinf: opts.include_2jinf,
            boundary_twists: false,
        };
        let r = compare_presentations(1, Alphabet::Strands(2), o, opts.tree_cap)?;
        out.push(Check::new(
            "control: without boundary twists T~_1(2) differs",
            !r.isomorphic(),
            format!("inf-presentation {}", describe_report(&r.presented)),
        ));
    }
    Ok(out)
}

fn describe_report(g: &crate::abelian::GroupReport) -> String {
    describe_invariants(g.free_rank, &g.torsion)
}

fn describe_invariants(free_rank: usize, torsion: &[u64]) -> String {
    let mut parts = Vec::new();
    if free_rank > 0 {
        parts.push(if free_rank == 1 { "Z".to_string() } else { format!("Z^{free_rank}") });
    }
    let mut i = 0;
    while i < torsion.len() {
        let d = torsion[i];
        let run = torsion[i..].iter().take_while(|&&x| x == d).count();
        parts.push(if run == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{run}") });
        i += run;
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn top_sequence(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in opts.strands(&[2, 3]) {
        let o = InftyOptions {
            include_2jinf: opts.include_2jinf,
            boundary_twists: true,
        };
        let r = verify_top_sequence(3, Alphabet::Strands(m), o, opts.tree_cap)?;
        let witness = r.failure.clone().or_else(|| {
            r.exactness.as_ref().and_then(|e| {
                e.junctions
                    .iter()
                    .find_map(|j| j.witness.as_ref().map(|w| format!("junction {}: [{}]", j.index, w.join(","))))
            })
        });
        out.push(
            Check::new(
                format!("Z2 (x) L_3({m}) -> T~_3({m}) -> D_3({m}) -> 0"),
                r.passed(),
                format!(
                    "{} -> {} -> {}",
                    describe_report(&r.left),
                    describe_report(&r.middle),
                    describe_report(&r.right)
                ),
            )
            .witness(witness),
        );
        let sys = LieSystem::new(Alphabet::Strands(m));
        let rank = d_group(3, &sys)?.rank();
        let want = if m == 2 { Some(0) } else if m == 3 { Some(6) } else { None };
        if let Some(w) = want {
            out.push(Check::new(format!("rank D_3({m})"), rank == w, format!("{rank}, expected {w}")));
        }
    }
    Ok(out)
}

fn sl_roundtrip(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in opts.strands(&[1, 2, 3]) {
        let a = Alphabet::Strands(m);
        let sys = LieSystem::new(a);
        for order in 0..=2usize {
            let js = sorted_rooted_trees(order + 1, &a.labels(), opts.tree_cap)?;
            let mut failure = None;
            for j in &js {
                let d = half_eta_doubled(j, &sys)?;
                let got = sl_map(&d, &sys)?;
                if got != sys.lie.tree(j)?.mod2() {
                    failure = Some(format!("J = {j}"));
                    break;
                }
            }
            out.push(
                Check::new(
                    format!("sl(1/2 eta(J-J)) = J, order {order}, m = {m}"),
                    failure.is_none(),
                    format!("{} rooted trees", js.len()),
                )
                .witness(failure),
            );
        }
    }
    Ok(out)
}

fn eta_membership(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in opts.strands(&[1, 2, 3]) {
        let a = Alphabet::Strands(m);
        let lie = FreeLie::new(a);
        for order in 0..=3usize {
            let forms = enumerate_trees(order, a, opts.tree_cap)?;
            let mut failure = None;
            for f in &forms {
                if !bracket_map(&eta(&f.tree, &lie)?, &lie).is_zero() {
                    failure = Some(f.tree.to_string());
                    break;
                }
            }
            out.push(
                Check::new(
                    format!("bracket(eta(t)) = 0, order {order}, m = {m}"),
                    failure.is_none(),
                    format!("{} trees", forms.len()),
                )
                .witness(failure),
            );
        }
    }
    Ok(out)
}

fn clasper() -> Result<Vec<Check>> {
    let a = Alphabet::Strands(3);
    let lie = FreeLie::new(a);
    let alpha: Vec<GroupWord> = (0..3).map(GroupWord::generator).collect();
    let mut out = Vec::new();

    let r = clasper_commutator(&parse_rooted("(1,(2,3))")?, &alpha, &lie, 8)?;
    let want = lie.tree(&parse_rooted("(1,(2,3))")?)?.neg();
    out.push(Check::new(
        "order 2: gamma = -[a1,[a2,a3]] in G_3/G_4",
        r.degree == 3 && r.class == want,
        format!("sign {}, degree {}", r.sign, r.degree),
    ));

    let omega = GroupWord::parse("[[x2,x3],x1]", a)?;
    let r = twisted_clasper_commutator(&parse_rooted("(inf,(2,3))")?, &alpha, &omega, &lie, 8)?;
    let want = lie.tree(&parse_rooted("(((2,3),1),(2,3))")?)?;
    out.push(Check::new(
        "twisted: gamma = [[[a2,a3],a1],[a2,a3]] in G_5/G_6",
        r.degree == 5 && r.class == want,
        format!("sign {}, degree {}", r.sign, r.degree),
    ));
    Ok(out)
}

fn random_word(rng: &mut ChaCha8Rng, letters: usize, max_len: usize) -> GroupWord {
    let len = rng.random_range(0..=max_len);
    GroupWord::from_letters((0..len).map(|_| {
        let g = rng.random_range(0..letters);
        (g, if rng.random_bool(0.5) { 1 } else { -1 })
    }))
}

fn magnus_suite(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut failure = None;
    for _ in 0..opts.magnus_pairs {
        let u = random_word(&mut rng, 3, 12);
        let v = random_word(&mut rng, 3, 12);
        if magnus(&u.mul(&v), 5) != magnus(&u, 5).mul(&magnus(&v, 5)) {
            failure = Some(format!("u = {u}, v = {v}"));
            break;
        }
    }
    out.push(
        Check::new(
            "magnus(uv) = magnus(u) magnus(v)",
            failure.is_none(),
            format!("{} random pairs, length <= 12, cutoff 5, seed {}", opts.magnus_pairs, opts.seed),
        )
        .witness(failure),
    );

    let a = Alphabet::Strands(3);
    let lie = FreeLie::new(a);
    let ls = [
        GroupWord::parse("[x2,x3]", a)?,
        GroupWord::parse("[x3,x1]", a)?,
        GroupWord::parse("[x1,x2]", a)?,
    ];
    let f = artin(&ls, 2)?;
    out.push(Check::new(
        "Borromean longitudes validate",
        f.validated(),
        format!("product condition modulo F_{}", f.class()),
    ));
    let jo = johnson_order(&f)?;
    out.push(Check::new(
        "Borromean Johnson order",
        jo == JohnsonOrder::Exact(1),
        format!("{jo:?}, expected Exact(1)"),
    ));
    let mu = milnor_first_nonvanishing(&f, &lie)?;
    let y = parse_tree("<1,2,3>")?.canonicalize()?;
    let expect = eta(&y.tree, &lie)?.scale(&BigInt::from(y.sign));
    let sign = if mu.tensor == expect {
        Some(1)
    } else if mu.tensor == expect.scale(&BigInt::from(-1)) {
        Some(-1)
    } else {
        None
    };
    out.push(
        Check::new(
            "Borromean Milnor tensor in D_1 and equal to eta(Y(1,2,3))",
            mu.in_d && sign.is_some(),
            format!(
                "mu = {}, in D: {}, sign {}",
                mu.tensor.display(&lie),
                mu.in_d,
                sign.map_or("none".into(), |s| s.to_string())
            ),
        )
        .witness(sign.is_none().then(|| mu.tensor.display(&lie))),
    );
    Ok(out)
}

fn witt(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in opts.strands(&[1, 2, 3]) {
        let ring = BracketRing::lie(Alphabet::Strands(m));
        let max = if m == 2 { 6 } else { 5 };
        let mut ranks = Vec::new();
        let mut ok = true;
        for n in 1..=max {
            let g = ring.group(n);
            let w = witt_rank(n as u32, m as u64) as usize;
            ok &= g.free_rank() == w && g.torsion().is_empty();
            ranks.push(g.free_rank());
        }
        if m == 2 {
            ok &= ranks == [2, 1, 2, 3, 6, 9];
        }
        out.push(Check::new(
            format!("rank L_n({m}) from the presentation, n <= {max}"),
            ok,
            format!("{ranks:?}"),
        ));
    }
    Ok(out)
}
