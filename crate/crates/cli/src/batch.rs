//! `batch-check`: one JSON line per matroid file, in filename order.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use cyclorder::io::load;
use cyclorder::{beta_ground, find_ordering, gamma, is_tight, verify, ElementId};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Serialize, Default)]
struct Line {
    file: String,
    /// `ok`, `skipped`, `failed` (an ordering is missing or wrong) or `error`.
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<String>,
    #[serde(rename = "beta_E", skip_serializing_if = "Option::is_none")]
    beta_e: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tight: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordering_found: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<Vec<ElementId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn check(path: &Path, max_n: Option<usize>) -> Line {
    let file = path
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_default();
    let m = match load(path) {
        Ok(m) => m,
        Err(e) => {
            return Line {
                file,
                status: "error",
                error: Some(e.to_string()),
                ..Line::default()
            }
        }
    };
    let tight = is_tight(&m);
    let mut line = Line {
        file,
        status: "ok",
        n: Some(m.n()),
        r: Some(m.rank_of_matroid()),
        gamma: Some(gamma(&m).to_string()),
        beta_e: Some(beta_ground(&m).to_string()),
        tight: Some(tight),
        ..Line::default()
    };
    if max_n.is_some_and(|k| m.n() > k) {
        line.status = "skipped";
        return line;
    }
    match find_ordering(&m) {
        Ok(Some(o)) => {
            let ok = verify(&m, o.as_slice()) == Ok(true);
            line.ordering_found = Some(true);
            line.verified = Some(ok);
            line.order = Some(o.into_vec());
            if !ok {
                line.status = "failed";
            }
        }
        Ok(None) => {
            line.ordering_found = Some(false);
            if tight {
                line.status = "failed";
            }
        }
        Err(e) => {
            line.status = "error";
            line.error = Some(e.to_string());
        }
    }
    line
}

pub fn run(dir: &Path, max_n: Option<usize>, jobs: Option<usize>) -> anyhow::Result<u8> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .with_context(|| format!("cannot read directory {}", dir.display()))?;
    files.retain(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"));
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().context("cannot start worker threads")?;
    // collect keeps input order whatever the completion order
    let lines: Vec<Line> = pool.install(|| files.par_iter().map(|p| check(p, max_n)).collect());

    let mut all_ok = true;
    for line in &lines {
        all_ok &= matches!(line.status, "ok" | "skipped");
        println!("{}", serde_json::to_string(line)?);
    }
    Ok(if all_ok { 0 } else { super::INVALID })
}
