use std::fmt::Write;

use crate::run::{name, RunReport, Verdict};

/// Solutions shown per task; the JSON report has all of them.
const SHOWN: usize = 8;

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
    }
}

/// One line per task, then one line per condition and solution.
pub fn table(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field {}", r.field);
    for t in &r.tasks {
        let expect = t.expect.map_or("-".to_string(), name);
        let _ = writeln!(
            out,
            "#{:<3} {:<24} {:<14} expect {:<9} {}  ({} ms)",
            t.index,
            t.op,
            name(t.outcome),
            expect,
            verdict(t.verdict),
            t.elapsed_ms
        );
        for c in &t.conditions {
            let _ = writeln!(out, "     {:<22} {:<4} checked {}", c.tag, if c.passed { "ok" } else { "FAIL" }, c.checked);
            for w in &c.witnesses {
                let mut line = format!("at {:?}", w.at);
                if let (Some(l), Some(rh)) = (&w.lhs, &w.rhs) {
                    let _ = write!(line, " lhs [{}] rhs [{}]", l.join(", "), rh.join(", "));
                }
                if let Some(n) = &w.note {
                    let _ = write!(line, " {n}");
                }
                let _ = writeln!(out, "       {line}");
            }
        }
        if let Some(s) = &t.search {
            let space = s.searched_dim.map_or("linear equations unsolvable".to_string(), |d| format!("searched space dim {d}"));
            let _ = writeln!(out, "     {space}, examined {}, {} solutions", s.examined, s.solutions.len());
            for sol in s.solutions.iter().take(SHOWN) {
                let _ = writeln!(out, "       [{}]", sol.join(", "));
            }
            if s.solutions.len() > SHOWN {
                let _ = writeln!(out, "       ... {} more", s.solutions.len() - SHOWN);
            }
        }
    }
    let _ = writeln!(out, "verdict {} ({} tasks)", verdict(r.verdict), r.tasks.len());
    out
}
