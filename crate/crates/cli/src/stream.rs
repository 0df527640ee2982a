//! Batch scanning: lines are read in chunks, analyzed on a worker pool, and
//! written back in input order.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use domchain::scan::{process_line, GraphRecord, ScanOptions, Status, Summary};
use rayon::prelude::*;

use crate::Format;

const CHUNK: usize = 2048;

const CSV_HEADER: [&str; 16] = [
    "input_index", "graph6", "n", "status", "ir", "gamma", "i", "alpha", "Gamma", "IR", "gamma_gr", "F", "F_alpha",
    "violated", "problem1", "detail",
];

pub fn scan(file: Option<&Path>, opts: &ScanOptions, format: Format, jobs: Option<usize>) -> Result<Summary> {
    let reader: Box<dyn BufRead> = match file {
        None => Box::new(io::stdin().lock()),
        Some(p) if p.as_os_str() == "-" => Box::new(io::stdin().lock()),
        Some(p) => Box::new(BufReader::new(File::open(p).with_context(|| format!("cannot open {}", p.display()))?)),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = jobs {
        pool = pool.num_threads(k.max(1));
    }
    let pool = pool.build()?;

    let stdout = io::stdout();
    let mut sink = Sink::new(format, BufWriter::new(stdout.lock()))?;
    let mut summary = Summary::default();
    let mut chunk: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
    let mut lines = reader.lines().enumerate();
    loop {
        chunk.clear();
        for (index, line) in lines.by_ref() {
            let line = line.context("reading input")?;
            if !line.trim().is_empty() {
                chunk.push((index, line));
                if chunk.len() == CHUNK {
                    break;
                }
            }
        }
        if chunk.is_empty() {
            break;
        }
        // `collect` on an indexed parallel iterator keeps input order.
        let records: Vec<GraphRecord> =
            pool.install(|| chunk.par_iter().map(|(i, line)| process_line(*i, line, opts)).collect());
        for rec in &records {
            summary.add(rec);
            sink.record(rec)?;
        }
    }
    sink.finish(&summary)?;
    Ok(summary)
}

enum Sink<W: Write> {
    Json(W),
    Csv(Box<csv::Writer<W>>),
}

impl<W: Write> Sink<W> {
    fn new(format: Format, out: W) -> Result<Self> {
        Ok(match format {
            Format::Json => Sink::Json(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(CSV_HEADER)?;
                Sink::Csv(Box::new(w))
            }
        })
    }

    fn record(&mut self, rec: &GraphRecord) -> Result<()> {
        match self {
            Sink::Json(out) => {
                serde_json::to_writer(&mut *out, rec)?;
                writeln!(out)?;
            }
            Sink::Csv(w) => w.write_record(csv_row(rec))?,
        }
        Ok(())
    }

    /// JSON ends with a summary line; CSV keeps the table rectangular and
    /// sends the summary to standard error.
    fn finish(self, summary: &Summary) -> Result<()> {
        match self {
            Sink::Json(mut out) => {
                serde_json::to_writer(&mut out, &serde_json::json!({ "summary": summary }))?;
                writeln!(out)?;
                out.flush()?;
            }
            Sink::Csv(mut w) => {
                w.flush()?;
                eprintln!("summary: {}", serde_json::to_string(summary)?);
            }
        }
        Ok(())
    }
}

fn csv_row(rec: &GraphRecord) -> Vec<String> {
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    let flag = |v: Option<bool>| v.map(|x| x.to_string()).unwrap_or_default();
    let values = rec.invariants.as_ref().map(|v| v.as_array()).unwrap_or([None; 7]);
    let (status, detail) = match &rec.status {
        Status::Ok => ("ok", String::new()),
        Status::Skipped { reason } => ("skipped", reason.clone()),
        Status::Capped { invariants } => ("capped", invariants.join(" ")),
        Status::Failed { reason } => ("failed", reason.clone()),
    };
    let mut violated: Vec<&str> = rec.verdicts.iter().filter(|v| v.is_violation()).map(|v| v.property.name()).collect();
    violated.extend(rec.theorem_violations());
    let problem1 = rec
        .problem1
        .map(|p| match (p.candidate_all, p.candidate_some) {
            (true, _) => "all",
            (false, true) => "some",
            _ => "none",
        })
        .unwrap_or_default();
    let mut row = vec![opt(rec.input_index), rec.graph6.clone(), opt(rec.n), status.to_string()];
    row.extend(values.iter().map(|v| opt(*v)));
    row.push(flag(rec.classes.map(|c| c.f)));
    row.push(flag(rec.classes.map(|c| c.f_alpha)));
    row.push(violated.join(" "));
    row.push(problem1.to_string());
    row.push(detail);
    row
}
