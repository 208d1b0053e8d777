//! Command-line front end: argument handling, JSON reports and a results cache.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use cache::Cache;
use config::{Cli, Invocation, IoOptions, RunConfig};
use error::{CliError, CliResult};
use report::{Report, ENGINE_VERSION};

/// Runs a configuration, consulting the cache when allowed.
pub fn run(config: &RunConfig, cache: Option<&Cache>, trust_cache: bool) -> CliResult<Report> {
    let start = Instant::now();
    let usable = trust_cache || !config.is_verdict();
    if let Some(outcome) = cache.filter(|_| usable).and_then(|c| c.load(config)) {
        return Ok(Report {
            engine: ENGINE_VERSION.into(),
            config: config.clone(),
            results: outcome.results,
            passed: outcome.passed,
            cached: true,
            elapsed_ms: start.elapsed().as_millis(),
            text: outcome.text,
        });
    }
    let outcome = commands::execute(config)?;
    if let Some(c) = cache {
        // A cache that cannot be written only costs time.
        let _ = c.store(config, &outcome);
    }
    Ok(Report {
        engine: ENGINE_VERSION.into(),
        config: config.clone(),
        results: outcome.results,
        passed: outcome.passed,
        cached: false,
        elapsed_ms: start.elapsed().as_millis(),
        text: outcome.text,
    })
}

pub fn read_report(path: &Path) -> CliResult<Report> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_owned(),
        source,
    })
}

fn write_json(path: &Path, report: &Report) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Runs parsed arguments, prints the human table to `out`, and returns the exit code.
pub fn main_with(cli: Cli, out: &mut impl Write) -> CliResult<u8> {
    let (invocation, io) = cli.resolve()?;
    let cache = io.cache_dir.as_ref().map(Cache::new);
    match invocation {
        Invocation::Run(config) => {
            let report = run(&config, cache.as_ref(), io.trust_cache)?;
            emit(&report, &io, out)?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Invocation::Replay(path) => {
            let old = read_report(&path)?;
            old.config.validate()?;
            let fresh = run(&old.config, None, false)?;
            let same = fresh.results == old.results && fresh.passed == old.passed;
            emit(&fresh, &io, out)?;
            let _ = writeln!(
                out,
                "replay of {}: results {}",
                path.display(),
                if same { "identical" } else { "differ" }
            );
            Ok(if same && fresh.passed { 0 } else { 1 })
        }
    }
}

fn emit(report: &Report, io: &IoOptions, out: &mut impl Write) -> CliResult<()> {
    let io_err = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    out.write_all(report.text.as_bytes()).map_err(io_err)?;
    if report.cached {
        writeln!(out, "(from cache)").map_err(io_err)?;
    }
    if let Some(p) = &io.json {
        write_json(p, report)?;
    }
    Ok(())
}
