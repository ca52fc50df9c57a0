use std::fmt::Write as _;

use inv3412::enumerate::check_cap;
use inv3412::genfun::{emit_closed_form, GfDocument, GfKind, Solver, Style};
use inv3412::kernel::{shape_catalog_capped, validate_classification, validate_shapes_bounded, ShapeRecord};
use inv3412::oracle::{
    brute_parity_table_capped, compare_with_tables, golden_diff_counts, golden_diff_even, verify_paper_formulas,
    CountTable, GoldenDiff, ParityTable, FIXTURES,
};
use inv3412::{Error, Involution, Result};
use serde_json::{json, Value};

use crate::config::{ClassifyArgs, GenfunArgs, Global, ShapesArgs, TableArgs, VerifyArgs, SOFT_R_LIMIT};
use crate::output::Outcome;

fn check_r(r: usize, g: &Global) -> Result<()> {
    if r > SOFT_R_LIMIT && !g.force {
        return Err(Error::Argument(format!(
            "r = {r} is above the soft limit {SOFT_R_LIMIT}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn catalog(r: usize, g: &Global) -> Result<Vec<ShapeRecord>> {
    if r == 0 {
        Ok(Vec::new())
    } else {
        shape_catalog_capped(r, g.cap)
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn series_line(coeffs: &[String]) -> String {
    coeffs.join(", ")
}

pub fn genfun(a: &GenfunArgs, g: &Global) -> Result<Outcome> {
    check_r(a.r_max, g)?;
    let mut solver = Solver::with_catalog(catalog(a.r_max, g)?, a.r_max, a.order);
    let style = Style::from(a.style);
    let mut docs = Vec::new();
    let mut text = String::new();
    let mut csv = vec![vec!["kind".into(), "r".into(), "n".into(), "coefficient".into()]];
    let mut warnings = Vec::new();
    for r in 0..=a.r_max {
        for kind in GfKind::ALL {
            let res = solver.result(kind, r)?;
            let doc = GfDocument::new(&res);
            let shown = emit_closed_form(&res, style);
            if let Some(w) = shown.warning {
                warnings.push(format!("{kind}_{r}: {w}"));
            }
            if style == Style::Canonical {
                let _ = writeln!(text, "{kind}_{r}(x) = {}", shown.text);
            } else {
                let _ = writeln!(text, "{}", shown.text);
            }
            let _ = writeln!(text, "  series: {}\n", series_line(&doc.series));
            for (n, c) in doc.series.iter().enumerate() {
                csv.push(vec![kind.to_string(), r.to_string(), n.to_string(), c.clone()]);
            }
            docs.push(doc);
        }
    }
    Ok(Outcome {
        data: json!({ "results": docs }),
        text,
        csv,
        passed: true,
        warnings,
    })
}

fn shape_line(rec: &ShapeRecord) -> String {
    format!(
        "{}  s={} c={} f={} dd={} d={} parity21={}",
        rec.shape, rec.s, rec.c, rec.f, rec.dd, rec.d, rec.parity21
    )
}

pub fn shapes(a: &ShapesArgs, g: &Global) -> Result<Outcome> {
    check_r(a.r_max, g)?;
    let cat = shape_catalog_capped(a.r_max, g.cap)?;
    let mut text = format!("{} kernel shapes with capacity 1..={}\n", cat.len(), a.r_max);
    let mut csv = vec![["shape", "s", "c", "f", "dd", "d", "parity21"]
        .map(String::from)
        .to_vec()];
    for rec in &cat {
        let _ = writeln!(text, "{}", shape_line(rec));
        csv.push(vec![
            rec.shape
                .one_line()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            rec.s.to_string(),
            rec.c.to_string(),
            rec.f.to_string(),
            rec.dd.to_string(),
            rec.d.to_string(),
            rec.parity21.to_string(),
        ]);
    }
    Ok(Outcome {
        data: to_value(&cat),
        text,
        csv,
        passed: true,
        warnings: Vec::new(),
    })
}

fn diff_text(diffs: &[GoldenDiff]) -> String {
    diffs
        .iter()
        .map(|d| format!("(r={}, n={}): printed {}, computed {}", d.r, d.n, d.printed, d.computed))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn verify(a: &VerifyArgs, g: &Global) -> Result<Outcome> {
    check_r(a.r_max, g)?;
    check_cap(a.n_max, g.cap)?;
    let cat = catalog(a.r_max, g)?;
    let mut csv = vec![["check", "subject", "status", "detail"].map(String::from).to_vec()];
    let mut text = String::new();
    let mut passed = true;
    let row = |csv: &mut Vec<Vec<String>>, check: &str, subject: String, ok: bool, detail: String| {
        csv.push(vec![
            check.into(),
            subject,
            if ok { "pass" } else { "fail" }.into(),
            detail,
        ]);
    };

    // classifier
    let (scan, skipped): (Vec<&ShapeRecord>, Vec<&ShapeRecord>) = cat.iter().partition(|r| r.s <= a.n_max);
    let records: Vec<ShapeRecord> = scan.iter().map(|r| (*r).clone()).collect();
    let bounds: Vec<usize> = records.iter().map(|r| (r.s + a.extra).min(a.n_max)).collect();
    let reports = validate_shapes_bounded(&records, &bounds, g.cap)?;
    let bad = reports.iter().filter(|r| !r.passed()).count();
    passed &= bad == 0;
    let _ = writeln!(
        text,
        "classifier: {} of {} shapes validated, {} failed, {} larger than n = {} not scanned",
        reports.len() - bad,
        reports.len(),
        bad,
        skipped.len(),
        a.n_max
    );
    for rep in &reports {
        let detail = match rep.violations.first() {
            None => format!("n <= {}", rep.n_max),
            Some(v) => format!("{:?}: {}", v.kind, v.detail),
        };
        if !rep.passed() {
            let _ = writeln!(text, "  {} FAILED: {detail}", rep.shape);
        }
        row(&mut csv, "classifier", rep.shape.to_string(), rep.passed(), detail);
    }

    // brute force
    let table = brute_parity_table_capped(a.n_max, a.r_max, g.cap)?;
    let counts = table.counts();
    let sums = counts.check_column_sums();
    passed &= sums.is_ok();
    let _ = writeln!(
        text,
        "column sums: {}",
        match &sums {
            Ok(()) => "ok".to_string(),
            Err(e) => e.to_string(),
        }
    );
    row(
        &mut csv,
        "column_sums",
        format!("n <= {}", a.n_max),
        sums.is_ok(),
        String::new(),
    );

    let mut solver = Solver::with_catalog(cat.clone(), a.r_max, a.order.max(a.n_max));
    let series = compare_with_tables(&mut solver, &table, a.r_max)?;
    passed &= series.passed();
    let _ = writeln!(
        text,
        "series vs brute force: {} I-cells and {} N-cells, {} mismatches",
        series.i_cells,
        series.n_cells,
        series.mismatches.len()
    );
    for m in &series.mismatches {
        let _ = writeln!(
            text,
            "  {}_{} at n = {}: pipeline {}, brute {}",
            m.kind, m.r, m.n, m.pipeline, m.brute
        );
    }
    row(
        &mut csv,
        "series",
        format!("r <= {}, n <= {}", a.r_max, a.n_max),
        series.passed(),
        format!("{} cells", series.i_cells + series.n_cells),
    );

    // printed reference data, reported but not binding
    let t1 = golden_diff_counts(&counts);
    let t2 = golden_diff_even(&table);
    let _ = writeln!(text, "printed count table differences (not binding): {}", t1.len());
    let _ = writeln!(text, "printed even-count table differences (not binding): {}", t2.len());
    for (name, diffs) in [("table1", &t1), ("table2_even", &t2)] {
        if !diffs.is_empty() {
            let _ = writeln!(text, "  {name}: {}", diff_text(diffs));
        }
        row(&mut csv, name, "printed".into(), diffs.is_empty(), diff_text(diffs));
    }
    let top = FIXTURES.iter().map(|f| f.r).max().unwrap_or(0).min(a.r_max);
    let mut paper = Vec::new();
    for r in 0..=top {
        paper.extend(verify_paper_formulas(&mut solver, r)?);
    }
    let _ = writeln!(text, "printed closed forms (not binding):");
    for c in &paper {
        let detail = if c.matches() {
            "match".to_string()
        } else {
            to_value(&c.series).to_string()
        };
        let _ = writeln!(text, "  {}_{}: {}", c.kind, c.r, detail);
        row(
            &mut csv,
            "closed_form",
            format!("{}_{}", c.kind, c.r),
            c.matches(),
            detail,
        );
    }
    let _ = writeln!(text, "{}", if passed { "PASS" } else { "FAIL" });

    Ok(Outcome {
        data: json!({
            "passed": passed,
            "classifier": reports,
            "not_scanned": skipped.iter().map(|r| r.shape.to_string()).collect::<Vec<_>>(),
            "column_sums_ok": sums.is_ok(),
            "series": series,
            "printed_tables": { "table1": t1, "table2_even": t2 },
            "printed_closed_forms": paper,
        }),
        text,
        csv,
        passed,
        warnings: Vec::new(),
    })
}

fn grid_text(label: &str, rows: &[Vec<u64>], overflow: &[u64], max_r: usize) -> String {
    let width = rows
        .iter()
        .chain(std::iter::once(&overflow.to_vec()))
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(3);
    let n = overflow.len();
    let mut s = format!("{label}\n{:>5}", "r\\n");
    for c in 0..n {
        let _ = write!(s, " {c:>width$}");
    }
    s.push('\n');
    let over = format!(">{max_r}");
    for (label, row) in rows
        .iter()
        .enumerate()
        .map(|(r, row)| (r.to_string(), row))
        .chain([(over, &overflow.to_vec())])
    {
        let _ = write!(s, "{label:>5}");
        for v in row {
            let _ = write!(s, " {v:>width$}");
        }
        s.push('\n');
    }
    s
}

fn csv_rows(prefix: Option<&str>, rows: &[Vec<u64>], overflow: &[u64], max_r: usize) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let all = rows.iter().enumerate().map(|(r, row)| (r.to_string(), row.clone()));
    for (label, row) in all.chain([(format!(">{max_r}"), overflow.to_vec())]) {
        let mut rec: Vec<String> = prefix.map(String::from).into_iter().collect();
        rec.push(label);
        rec.extend(row.iter().map(ToString::to_string));
        out.push(rec);
    }
    out
}

pub fn table(a: &TableArgs, g: &Global) -> Result<Outcome> {
    let p: ParityTable = brute_parity_table_capped(a.n_max, a.r_max, g.cap)?;
    let c: CountTable = p.counts();
    let header = |lead: &[&str]| {
        lead.iter()
            .map(|s| s.to_string())
            .chain((0..=a.n_max).map(|n| n.to_string()))
            .collect::<Vec<_>>()
    };
    let (mut data, mut text, csv) = if a.parity {
        let mut csv = vec![header(&["parity", "r"])];
        csv.extend(csv_rows(Some("even"), &p.even, &p.overflow_even, a.r_max));
        csv.extend(csv_rows(Some("odd"), &p.odd, &p.overflow_odd, a.r_max));
        let text = grid_text("even", &p.even, &p.overflow_even, a.r_max)
            + "\n"
            + &grid_text("odd", &p.odd, &p.overflow_odd, a.r_max);
        (json!({ "table": p }), text, csv)
    } else {
        let mut csv = vec![header(&["r"])];
        csv.extend(csv_rows(None, &c.counts, &c.overflow, a.r_max));
        (
            json!({ "table": c }),
            grid_text("all", &c.counts, &c.overflow, a.r_max),
            csv,
        )
    };
    let mut passed = true;
    if a.golden {
        let diffs = if a.parity {
            golden_diff_even(&p)
        } else {
            golden_diff_counts(&c)
        };
        passed = diffs.is_empty();
        let _ = writeln!(
            text,
            "\ngolden: {} differences{}{}",
            diffs.len(),
            if diffs.is_empty() { "" } else { ": " },
            diff_text(&diffs)
        );
        data["golden_diffs"] = to_value(&diffs);
    }
    Ok(Outcome {
        data,
        text,
        csv,
        passed,
        warnings: Vec::new(),
    })
}

pub fn classify(a: &ClassifyArgs, g: &Global) -> Result<Outcome> {
    let rho: Involution = a.shape.parse()?;
    let rec = ShapeRecord::new(&rho)?;
    let mut text = shape_line(&rec) + "\n";
    let _ = writeln!(text, "cells (top row = highest value band, columns = position gaps):");
    for line in rec.grid.picture() {
        let _ = writeln!(text, "  {line}");
    }
    let mut data = json!({ "shape": rec });
    let mut passed = true;
    let mut csv = vec![["m", "l", "class"].map(String::from).to_vec()];
    for (m, l, class) in rec.grid.cells() {
        csv.push(vec![
            m.to_string(),
            l.to_string(),
            to_value(&class).as_str().unwrap_or("").to_string(),
        ]);
    }
    if let Some(n) = a.validate {
        let rep = validate_classification(&rec, n, g.cap)?;
        passed = rep.passed();
        let _ = writeln!(
            text,
            "validation through n = {n}: {} ({} violations)",
            if passed { "pass" } else { "FAIL" },
            rep.violations.len() + rep.suppressed
        );
        if let Some(w) = rep.first_counterexample() {
            let _ = writeln!(text, "  counterexample: {w}");
        }
        data["validation"] = to_value(&rep);
    }
    Ok(Outcome {
        data,
        text,
        csv,
        passed,
        warnings: Vec::new(),
    })
}
