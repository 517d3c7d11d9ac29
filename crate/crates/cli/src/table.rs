//! Plain-text summary of a report for terminals.

use std::fmt::Write;

use frobsoc_core::TheoremReport;

use crate::run::{JobResult, Report, Status};

struct Style {
    color: bool,
}

impl Style {
    fn head(&self, s: &str) -> String {
        if self.color {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn flag(&self, b: bool) -> String {
        match (b, self.color) {
            (true, true) => "\x1b[32mtrue\x1b[0m".into(),
            (false, true) => "\x1b[31mfalse\x1b[0m".into(),
            (b, false) => b.to_string(),
        }
    }
}

fn degrees(d: &[i64]) -> String {
    let parts: Vec<String> = d.iter().map(i64::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn theorem(out: &mut String, st: &Style, r: &TheoremReport) {
    let _ = writeln!(out, "{}", st.head(&format!("e = {}, q = {}, a(R) = {}", r.e, r.q, r.a_r)));
    let rows = [
        ("socle(S)", degrees(&r.socle_s.degrees)),
        ("socle(F(S))", degrees(&r.socle_fqs.degrees)),
        ("predicted", degrees(&r.predicted)),
        ("cond_a (via Tor1)", st.flag(r.cond_a_via_tor1)),
        ("cond_b", st.flag(r.cond_b)),
        ("cond_c", st.flag(r.cond_c)),
        ("cond_d", st.flag(r.cond_d)),
        ("tor1_dim", r.tor1_dim.total.to_string()),
        (
            "linkage identity",
            r.linkage_identity.map_or("n/a".to_string(), |b| st.flag(b)),
        ),
        (
            "tsd bound",
            format!("{} >= {}: {}", r.tsd_inequality.lhs, r.tsd_inequality.rhs, st.flag(r.tsd_inequality.holds)),
        ),
        ("consistent", st.flag(r.consistent)),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "  {k:<18} {v}");
    }
}

/// Renders `report`; ANSI styling only when `color` is set.
pub fn render(report: &Report, color: bool) -> String {
    let st = Style { color };
    let mut out = String::new();
    if let Some(result) = &report.result {
        match result {
            JobResult::Check { reports } | JobResult::Explore { reports } => {
                for r in reports {
                    theorem(&mut out, &st, r);
                }
            }
            JobResult::Socle { socle, hilbert_function } => {
                let _ = writeln!(out, "{} {}", st.head("socle degrees"), degrees(&socle.degrees));
                let hf: Vec<String> = hilbert_function.values.iter().map(|(d, v)| format!("{d}:{v}")).collect();
                let _ = writeln!(out, "{} {}", st.head("hilbert function"), hf.join(" "));
            }
            JobResult::Betti { grid, .. } => {
                let _ = writeln!(out, "{}", st.head("betti numbers"));
                out.push_str(grid);
            }
            JobResult::Gb { gb } => {
                let _ = writeln!(out, "{}", st.head("groebner basis"));
                for g in gb {
                    let _ = writeln!(out, "  {g}");
                }
            }
            JobResult::Tor1 { e, q, tor1_dim } => {
                let _ = writeln!(out, "{} e = {e}, q = {q}: {}", st.head("tor1"), tor1_dim.total);
                for (d, v) in &tor1_dim.by_degree {
                    let _ = writeln!(out, "  degree {d:<4} {v}");
                }
            }
            JobResult::Fuzz(f) => {
                let _ = writeln!(out, "{} seed {} count {}", st.head("fuzz"), f.seed, f.count);
                for (k, v) in &f.histogram {
                    let _ = writeln!(out, "  {k:<28} {v}");
                }
                let _ = writeln!(
                    out,
                    "  inconsistencies {}  findings {}  errors {}",
                    f.inconsistencies.len(),
                    f.findings.len(),
                    f.errors.len()
                );
            }
        }
    }
    if let Some(e) = &report.error {
        let label = match report.status {
            Status::Malformed => "malformed input",
            Status::Hypothesis => "hypothesis violated",
            Status::Inconsistent => "inconsistency",
            Status::Ok => "error",
        };
        let _ = writeln!(out, "{}: {}", st.head(label), e.message);
        if let Some(r) = &e.report {
            theorem(&mut out, &st, r);
        }
    }
    out
}
