//! The headline exclusion report: for every `c2` up to a bound, the
//! axiom-valid spectra whose obstruction verdict is Violated, rendered as
//! Markdown and TSV with stable, diffable assertion lines.
//!
//! Reports are cached on disk keyed by `(c2_max, crate version)`; a cache
//! hit returns the stored bytes unchanged.

use crate::spectrum::{enumerate, ObstructionVerdict, Spectrum};
use std::io;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug)]
pub struct Report {
    pub c2_max: i64,
    /// Per `c2`: total number of valid spectra and the violated ones.
    pub per_c2: Vec<C2Summary>,
}

#[derive(Clone, Debug)]
pub struct C2Summary {
    pub c2: i64,
    pub total: usize,
    pub violated: Vec<Spectrum>,
}

pub fn build_report(c2_max: i64) -> Report {
    assert!(c2_max >= 1, "c2_max must be >= 1");
    let per_c2 = (1..=c2_max)
        .map(|c2| {
            let all = enumerate(c2);
            let violated = all
                .iter()
                .filter(|s| s.obstruction() == ObstructionVerdict::Violated)
                .cloned()
                .collect();
            C2Summary {
                c2,
                total: all.len(),
                violated,
            }
        })
        .collect();
    Report { c2_max, per_c2 }
}

fn tail_string(s: &Spectrum) -> String {
    s.tail()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render_markdown(report: &Report) -> String {
    let mut out = String::new();
    let total_violated: usize = report.per_c2.iter().map(|c| c.violated.len()).sum();
    out.push_str(&format!(
        "# Spectrum exclusion report, c2 <= {}\n\n",
        report.c2_max
    ));
    out.push_str(
        "Candidate spectra satisfy symmetry, connectedness and the trailing-ones \
         axiom. A row below additionally has s(0) = 1, s(1) = s(2) = 2, lies \
         outside the exceptional family, and fails the count-of-ones bound \
         `card{i >= 1 : s(i) = 1} >= sum_{i >= 1} max(s(i) - 2, 0) - 1`, so it \
         is not the spectrum of any stable rank-2 bundle with c1 = 0.\n\n",
    );
    out.push_str("| c2 | valid spectra | violated |\n|---:|---:|:---|\n");
    for c in &report.per_c2 {
        let list = if c.violated.is_empty() {
            "-".to_string()
        } else {
            c.violated
                .iter()
                .map(|s| format!("({})", tail_string(s)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push_str(&format!("| {} | {} | {} |\n", c.c2, c.total, list));
    }
    out.push('\n');

    // Stable assertion lines for CI diffs.
    let below_21: usize = report
        .per_c2
        .iter()
        .filter(|c| c.c2 <= 20)
        .map(|c| c.violated.len())
        .sum();
    out.push_str(&format!(
        "ASSERT violated_count c2<={} = {}\n",
        report.c2_max.min(20),
        below_21
    ));
    for c in &report.per_c2 {
        for s in &c.violated {
            out.push_str(&format!(
                "ASSERT violated c2={} tail={} verdict=violated\n",
                c.c2,
                tail_string(s)
            ));
        }
    }
    out.push_str(&format!("ASSERT total_violated = {total_violated}\n"));
    out
}

pub fn render_tsv(report: &Report) -> String {
    let mut out = String::from("c2\ttail\tm\taxioms\tobstruction\n");
    for c in &report.per_c2 {
        for s in &c.violated {
            out.push_str(&format!(
                "{}\t{}\t{}\tok\t{}\n",
                c.c2,
                tail_string(s),
                s.m(),
                s.obstruction()
            ));
        }
    }
    out
}

/// Where the cached artifacts live for a given bound and version.
pub fn cache_paths(cache_dir: &Path, c2_max: i64, version: &str) -> (PathBuf, PathBuf) {
    let stem = format!("report-c2max{c2_max}-v{version}");
    (
        cache_dir.join(format!("{stem}.md")),
        cache_dir.join(format!("{stem}.tsv")),
    )
}

pub struct WrittenReport {
    pub markdown_path: PathBuf,
    pub tsv_path: PathBuf,
    pub markdown: String,
    pub cache_hit: bool,
}

/// Renders and writes the report, or reads it back on a cache hit. Bytes on
/// disk are authoritative: a hit returns them unchanged.
pub fn write_cached(c2_max: i64, cache_dir: &Path, version: &str) -> io::Result<WrittenReport> {
    let (md_path, tsv_path) = cache_paths(cache_dir, c2_max, version);
    if md_path.is_file() && tsv_path.is_file() {
        let markdown = std::fs::read_to_string(&md_path)?;
        return Ok(WrittenReport {
            markdown_path: md_path,
            tsv_path,
            markdown,
            cache_hit: true,
        });
    }
    let report = build_report(c2_max);
    let markdown = render_markdown(&report);
    let tsv = render_tsv(&report);
    std::fs::create_dir_all(cache_dir)?;
    std::fs::write(&md_path, &markdown)?;
    std::fs::write(&tsv_path, tsv)?;
    Ok(WrittenReport {
        markdown_path: md_path,
        tsv_path,
        markdown,
        cache_hit: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_at_20_is_clean() {
        let r = build_report(20);
        assert!(r.per_c2.iter().all(|c| c.violated.is_empty()));
        let md = render_markdown(&r);
        assert!(md.contains("ASSERT violated_count c2<=20 = 0"));
        assert!(md.contains("ASSERT total_violated = 0"));
    }

    #[test]
    fn report_at_21_flags_known_rows() {
        let r = build_report(21);
        let md = render_markdown(&r);
        assert!(md.contains("ASSERT violated c2=21 tail=1,2,2,4,2 verdict=violated"));
        assert!(md.contains("ASSERT violated c2=21 tail=1,2,2,3,3 verdict=violated"));
        let tsv = render_tsv(&r);
        assert!(tsv.contains("21\t1,2,2,4,2\t4\tok\tviolated"));
    }

    #[test]
    fn report_at_1_is_empty() {
        let r = build_report(1);
        assert_eq!(r.per_c2.len(), 1);
        assert!(r.per_c2[0].violated.is_empty());
    }

    #[test]
    fn cache_round_trip_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let first = write_cached(21, dir.path(), "test").unwrap();
        assert!(!first.cache_hit);
        let second = write_cached(21, dir.path(), "test").unwrap();
        assert!(second.cache_hit);
        assert_eq!(first.markdown, second.markdown);
        let tsv1 = std::fs::read(&first.tsv_path).unwrap();
        let tsv2 = std::fs::read(&second.tsv_path).unwrap();
        assert_eq!(tsv1, tsv2);
    }
}
