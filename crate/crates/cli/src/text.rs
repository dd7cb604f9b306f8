use std::fmt::Write;

use vacuity::fol3::ModelFile;
use vacuity::goedel::{FixedPointSummary, GoedelReport, InstanceReport, ToySystem, Unrolling};
use vacuity::prop3::{TruthTable, TruthValue3};
use vacuity::syllogistics::{MoodAudit, SquareReport};

fn tf(b: bool) -> char {
    if b {
        'T'
    } else {
        'F'
    }
}

pub fn tautology(table: &TruthTable, classical: bool) -> String {
    let rows = table.rows.len();
    let count = |v| table.rows.iter().filter(|r| r.value == v).count();
    let (t, n) = (count(TruthValue3::T), count(TruthValue3::N));
    let mut out = if t == rows {
        format!("truth-relevant tautology (T on all {rows} rows)")
    } else if n == rows {
        "NOT a truth-relevant tautology (vacuous on all rows)".to_string()
    } else {
        format!(
            "NOT a truth-relevant tautology (T on {t}/{rows} rows, vacuous on {n}, false on {})",
            count(TruthValue3::F)
        )
    };
    let _ = write!(
        out,
        "\nclassical tautology: {}",
        if classical { "yes" } else { "no" }
    );
    out
}

pub fn truth_table(table: &TruthTable, classical: &[bool]) -> String {
    let mut out = String::new();
    let widths: Vec<usize> = table.atoms.iter().map(|a| a.len().max(1)).collect();
    for (a, w) in table.atoms.iter().zip(&widths) {
        let _ = write!(out, "{a:<w$} ");
    }
    out.push_str("| classical | eval3\n");
    for (row, c) in table.rows.iter().zip(classical) {
        for (v, w) in row.assignment.iter().zip(&widths) {
            let _ = write!(out, "{:<w$} ", tf(*v));
        }
        let _ = writeln!(out, "| {:<9} | {}", tf(*c), row.value);
    }
    out
}

pub fn model(m: &ModelFile) -> String {
    let preds: Vec<String> = m
        .predicates
        .iter()
        .map(|(name, tuples)| {
            let items: Vec<String> = tuples.iter().map(|t| t.join(",")).collect();
            format!("{name}={{{}}}", items.join(","))
        })
        .collect();
    format!("domain {{{}}} {}", m.domain.join(","), preds.join(" "))
}

pub fn square(r: &SquareReport) -> String {
    let mut out = format!(
        "square of opposition, scheme {}, domains 1..{}, {} models\n",
        r.scheme, r.max_domain, r.models_checked
    );
    for law in &r.laws {
        let _ = writeln!(
            out,
            "{} {}",
            if law.passed { "PASS" } else { "FAIL" },
            law.law
        );
        for c in law.clauses.iter().filter(|c| !c.holds) {
            let _ = write!(out, "  violated: {}", c.statement);
            match &c.model {
                Some(m) => {
                    let _ = writeln!(out, "; countermodel {}", model(m));
                }
                None => out.push_str("; no witness\n"),
            }
        }
    }
    let failed = r.failed();
    let _ = write!(
        out,
        "{}/{} laws hold; {}",
        r.laws.len() - failed.len(),
        r.laws.len(),
        if r.matches_expected() {
            "as expected for this scheme"
        } else {
            "NOT as expected for this scheme"
        }
    );
    out
}

pub fn moods(r: &MoodAudit) -> String {
    let catalog = MoodAudit::expected_catalog(r.scheme);
    let diff = r.expected_diff();
    let mut out = if diff.is_empty() {
        format!("{}/256 valid; matches {catalog} catalog\n", r.valid.len())
    } else {
        format!(
            "{}/256 valid; differs from {catalog} catalog: missing [{}], unexpected [{}]\n",
            r.valid.len(),
            diff.missing.join(", "),
            diff.unexpected.join(", ")
        )
    };
    let _ = writeln!(
        out,
        "scheme {}, domains 1..{}, {} models",
        r.scheme, r.max_domain, r.models_checked
    );
    for v in r.verdicts.iter().filter(|v| v.valid) {
        let _ = writeln!(
            out,
            "  {} {}",
            v.mood,
            v.name.as_deref().unwrap_or("(unnamed)")
        );
    }
    out
}

pub fn build(sys: &ToySystem, fp: &FixedPointSummary) -> String {
    let mut out = format!(
        "axioms: {}, closure: {} sentences\n",
        sys.axioms().len(),
        sys.closure_size()
    );
    for t in sys.theorems() {
        let _ = writeln!(
            out,
            "  {}{}",
            vacuity::render(&t.sentence),
            if sys.is_axiom(&t.sentence) {
                "  [axiom]"
            } else {
                ""
            }
        );
    }
    let _ = writeln!(out, "U = {}", fp.u);
    let _ = writeln!(out, "k = {}", fp.k);
    let _ = writeln!(out, "G = {}", fp.g);
    let _ = writeln!(out, "<G> = {}", fp.g_code);
    let _ = writeln!(out, "H = {}", fp.h);
    let _ = writeln!(out, "J = G <-> H");
    out.push_str("diag(k) = ⟨G⟩ verified\n");
    let _ = write!(
        out,
        "G in closure: {}",
        if fp.g_provable { "yes" } else { "no" }
    );
    out
}

fn row(r: &InstanceReport) -> String {
    let n = if r.is_g {
        "<G>".to_string()
    } else {
        r.n.to_string()
    };
    let empty: Vec<&str> = r.empty_terms.iter().map(|t| t.label()).collect();
    let empty = if empty.is_empty() {
        "no term empty".to_string()
    } else {
        format!("{} empty", empty.join(" and "))
    };
    format!(
        "  ~(exists x. (Prf(x,{n}) & Diag(k,{n}))): {} ({empty})",
        r.verdict
    )
}

pub fn unroll(u: &Unrolling, range: &[&InstanceReport], special: &[&InstanceReport]) -> String {
    let mut out = String::from("G unrolled (z instantiated, exists x kept inside):\n");
    for r in range {
        let _ = writeln!(out, "{}", row(r));
    }
    if !special.is_empty() {
        out.push_str("closure codes and <G>:\n");
        for r in special {
            let _ = writeln!(out, "{}", row(r));
        }
    }
    let _ = writeln!(out, "G: {} ({})", u.overall, u.reason);
    let _ = writeln!(
        out,
        "G as written, classical: {}",
        tf(u.as_written_classical)
    );
    let _ = write!(out, "G unrolled on x first: {}", u.x_first);
    out
}

pub fn report(r: &GoedelReport) -> String {
    let j = &r.j;
    let k_empty: Vec<&str> = j.k.empty_terms.iter().map(|t| t.label()).collect();
    let k = if k_empty.is_empty() {
        j.k.verdict.to_string()
    } else {
        format!("{} ({} empty)", j.k.verdict, k_empty.join(", "))
    };
    let tail = if j.equivalence_fails() {
        "equivalence fails"
    } else {
        "equivalence holds"
    };
    let mut out = format!("K: {k} / H: {} / J: {} — {tail}\n", j.h_gap, j.j_gap);
    let _ = writeln!(
        out,
        "classical: G: {} / H: {} / J: {}",
        tf(j.g_classical),
        tf(j.h_classical),
        tf(j.j_classical)
    );
    let _ = writeln!(
        out,
        "G unrolled: {} ({})",
        r.unrolling.overall, r.unrolling.reason
    );
    let _ = write!(
        out,
        "k = {}\n<G> = {}",
        r.fixed_point.k, r.fixed_point.g_code
    );
    out
}
