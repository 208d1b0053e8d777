//! One function per subcommand, each producing an [`Outcome`].

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};
use treegroups::abelian::{GroupReport, PresentedGroup};
use treegroups::lie::{BracketRing, FreeLie, LieSystem};
use treegroups::nilpotent::{
    artin, clasper_commutator, johnson_order, milnor_first_nonvanishing, twisted_clasper_commutator, GroupWord,
    JohnsonOrder,
};
use treegroups::suites::{run_suite, Suite, SuiteOptions};
use treegroups::tree_groups::{
    bracket_map, d_group, d_group_quasi, delta, eta, framed_infty, framed_quotient, sl_map, tree_group,
    InftyOptions, TensorElement, TreeSum,
};
use treegroups::trees::{parse_rooted, parse_rooted_sum, parse_tree_sum, Alphabet, Label};
use treegroups::Error;

use crate::config::{ArtinInput, Command, GroupKind, MapKind, RunConfig};
use crate::error::{CliError, CliResult};
use crate::report::Outcome;

pub fn execute(config: &RunConfig) -> CliResult<Outcome> {
    match &config.command {
        Command::Group {
            kind,
            order,
            alphabet,
            include_2jinf,
        } => group(*kind, *order, *alphabet, *include_2jinf, config.tree_cap),
        Command::Map { map, alphabet, element } => map_element(*map, *alphabet, element),
        Command::Verify { suites, options } => verify(suites, options),
        Command::Artin(input) => artin_cmd(input, config.magnus_cap),
        Command::Clasper {
            tree,
            words,
            omega,
            alphabet,
        } => clasper(tree, words, omega.as_deref(), *alphabet, config.magnus_cap),
    }
}

fn alphabet_name(a: Alphabet) -> String {
    match a {
        Alphabet::Strands(m) => format!("{m}"),
        Alphabet::Symplectic(g) => format!("g={g}"),
    }
}

pub fn describe(r: &GroupReport) -> String {
    let mut parts = Vec::new();
    if r.free_rank > 0 {
        parts.push(if r.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", r.free_rank) });
    }
    let mut i = 0;
    while i < r.torsion.len() {
        let d = r.torsion[i];
        let run = r.torsion[i..].iter().take_while(|&&x| x == d).count();
        parts.push(if run == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{run}") });
        i += run;
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn group(kind: GroupKind, order: usize, a: Alphabet, include_2jinf: bool, cap: usize) -> CliResult<Outcome> {
    let sys = || LieSystem::new(a);
    let g: std::sync::Arc<PresentedGroup> = match kind {
        GroupKind::T => tree_group(order, a, cap)?.group().clone(),
        GroupKind::Tquot => framed_quotient(order, a, cap)?.group().clone(),
        GroupKind::Tinf => {
            let o = InftyOptions {
                include_2jinf,
                boundary_twists: true,
            };
            framed_infty(order, a, o, cap)?.group().clone()
        }
        GroupKind::L => BracketRing::lie(a).group(order),
        GroupKind::Lq => BracketRing::quasi(a).group(order),
        GroupKind::D => std::sync::Arc::new(d_group(order, &sys())?.group().clone()),
        GroupKind::Dq => std::sync::Arc::new(d_group_quasi(order, &sys())?.group().clone()),
    };
    let report = g.report();
    let structure = describe(&report);
    let name = format!("{kind:?}_{order}({})", alphabet_name(a));
    let text = format!(
        "{name} = {structure}\n  {} generators, {} relators\n",
        report.generators,
        report.relators
    );
    Ok(Outcome {
        results: json!({
            "group": name,
            "free_rank": report.free_rank,
            "torsion": report.torsion,
            "structure": structure,
            "generators": report.generators,
            "relators": report.relators,
        }),
        passed: true,
        text,
    })
}

fn tree_sum(text: &str) -> CliResult<TreeSum> {
    let mut s = TreeSum::new();
    for (k, t) in parse_tree_sum(text)? {
        s.add_tree(&t, &k)?;
    }
    Ok(s)
}

fn map_element(map: MapKind, a: Alphabet, element: &str) -> CliResult<Outcome> {
    let sys = LieSystem::new(a);
    let lie = &sys.lie;
    let (value, degree) = match map {
        MapKind::Eta => {
            let s = tree_sum(element)?;
            let mut acc: Option<TensorElement> = None;
            for (t, k) in s.terms() {
                let e = eta(t, lie)?.scale(k);
                acc = Some(match acc {
                    None => e,
                    Some(x) if x.degree == e.degree => x.add(&e),
                    Some(_) => return Err(CliError::Usage("trees of mixed orders".into())),
                });
            }
            match acc {
                Some(e) => (e.display(lie), e.degree),
                None => ("0".into(), 0),
            }
        }
        MapKind::Delta => {
            let s = tree_sum(element)?;
            let mut out = TreeSum::new();
            for (t, k) in s.terms() {
                out.add_sum(&delta(t), k);
            }
            let d = out.terms().keys().next().map_or(0, |t| t.order());
            (out.to_string(), d)
        }
        MapKind::Sq => {
            let terms = parse_rooted_sum(element)?;
            let k = terms[0].1.num_leaves();
            let mut a_el = lie.zero(k);
            for (c, t) in &terms {
                if t.num_leaves() != k {
                    return Err(CliError::Usage("rooted trees of mixed degrees".into()));
                }
                a_el = a_el.add(&lie.tree(t)?.scale(c));
            }
            let g = sys.quasi.group(2 * k);
            let order = g.element_order(&sys.sq_vector(&a_el));
            let doubled: Vec<String> = lie
                .basis_trees(k)
                .iter()
                .zip(&a_el.coeffs)
                .filter(|(_, c)| *c % 2 != BigInt::from(0))
                .map(|(t, _)| format!("({t},{t})"))
                .collect();
            let shown = if doubled.is_empty() { "0".to_string() } else { doubled.join(" + ") };
            (format!("{shown} (order {order} in L'_{})", 2 * k), 2 * k)
        }
        MapKind::Sl => {
            let d = TensorElement::parse(element, lie)?;
            let e = sl_map(&d, &sys)?;
            (format!("{} (mod 2)", lie.display(&e)), e.degree)
        }
        MapKind::Bracket => {
            let d = TensorElement::parse(element, lie)?;
            let e = bracket_map(&d, lie);
            (lie.display(&e), e.degree)
        }
    };
    let name = format!("{map:?}").to_lowercase();
    Ok(Outcome {
        text: format!("{name}({element}) = {value}\n"),
        results: json!({ "map": name, "input": element, "value": value, "degree": degree }),
        passed: true,
    })
}

fn verify(suites: &[Suite], options: &SuiteOptions) -> CliResult<Outcome> {
    let mut reports = Vec::new();
    let mut text = String::new();
    for &s in suites {
        let r = run_suite(s, options)?;
        let _ = writeln!(text, "{:<16} {}", s.name(), if r.passed() { "PASS" } else { "FAIL" });
        for c in &r.checks {
            let _ = write!(text, "  [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
            if let Some(w) = &c.witness {
                let _ = write!(text, " (witness: {w})");
            }
            text.push('\n');
        }
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r.passed());
    Ok(Outcome {
        results: serde_json::to_value(&reports).expect("reports serialize"),
        passed,
        text,
    })
}

fn magnus_cap_check(needed: usize, cap: usize) -> CliResult<()> {
    if needed > cap {
        return Err(Error::ResourceCap {
            what: "Magnus degree".into(),
            count: needed,
            cap,
        }
        .into());
    }
    Ok(())
}

fn artin_cmd(input: &ArtinInput, magnus_cap: usize) -> CliResult<Outcome> {
    magnus_cap_check(input.class - 1, magnus_cap)?;
    let a = Alphabet::Strands(input.strands);
    let lie = FreeLie::new(a);
    let ls = input
        .longitudes
        .iter()
        .map(|w| GroupWord::parse(w, a))
        .collect::<treegroups::Result<Vec<_>>>()?;
    let f = artin(&ls, input.class - 2)?;
    let mut text = String::new();
    let mut results = serde_json::Map::new();
    results.insert("validated".into(), json!(f.validated()));
    let _ = writeln!(text, "class {}: product condition {}", input.class, if f.validated() { "holds" } else { "fails" });
    if let Some(v) = f.violation() {
        let mono: Vec<String> = v.monomial.iter().map(|g| format!("X{}", g + 1)).collect();
        let _ = writeln!(text, "  first violation: coefficient of {} differs by {}", mono.join(" "), v.difference);
        results.insert(
            "violation".into(),
            json!({ "monomial": mono, "difference": v.difference.to_string() }),
        );
        return Ok(Outcome {
            results: Value::Object(results),
            passed: false,
            text,
        });
    }
    let order = johnson_order(&f)?;
    let mut passed = true;
    match order {
        JohnsonOrder::Exact(k) => {
            let _ = writeln!(text, "Johnson order {k}");
            results.insert("johnson_order".into(), json!({ "exact": k }));
            match milnor_first_nonvanishing(&f, &lie) {
                Ok(mu) => {
                    let shown = mu.tensor.display(&lie);
                    let _ = writeln!(text, "mu_{} = {shown}", mu.degree);
                    let _ = writeln!(text, "in D_{}: {}", mu.degree, mu.in_d);
                    passed = mu.in_d;
                    results.insert(
                        "milnor".into(),
                        json!({ "degree": mu.degree, "tensor": shown, "in_d": mu.in_d }),
                    );
                }
                Err(Error::Precondition(why)) => {
                    let _ = writeln!(text, "no Milnor tensor: {why}");
                    results.insert("milnor".into(), json!({ "unavailable": why }));
                }
                Err(e) => return Err(e.into()),
            }
        }
        JohnsonOrder::AtLeast(c) => {
            let _ = writeln!(text, "identity modulo F_{}: Johnson order at least {c}", input.class);
            results.insert("johnson_order".into(), json!({ "at_least": c }));
        }
    }
    Ok(Outcome {
        results: Value::Object(results),
        passed,
        text,
    })
}

fn clasper(tree: &str, words: &[String], omega: Option<&str>, a: Alphabet, magnus_cap: usize) -> CliResult<Outcome> {
    let lie = FreeLie::new(a);
    let t = parse_rooted(tree)?;
    let ws = words
        .iter()
        .map(|w| GroupWord::parse(w, a))
        .collect::<treegroups::Result<Vec<_>>>()?;
    let cap = magnus_cap + 1;
    let r = match (omega, t.count_label(Label::Infinity)) {
        (Some(o), 1) => twisted_clasper_commutator(&t, &ws, &GroupWord::parse(o, a)?, &lie, cap)?,
        (None, 0) => clasper_commutator(&t, &ws, &lie, cap)?,
        _ => return Err(CliError::Usage("--omega goes with exactly one inf leaf".into())),
    };
    let class = lie.display(&r.class);
    let word = r.commutator.display(a);
    let text = format!(
        "sign {:+}\ncommutator {word}\ngamma = {class} in G_{}/G_{}\n",
        r.sign,
        r.degree,
        r.degree + 1
    );
    Ok(Outcome {
        results: json!({
            "sign": r.sign,
            "commutator": word,
            "degree": r.degree,
            "leading": lie.display(&r.leading),
            "class": class,
        }),
        passed: true,
        text,
    })
}
