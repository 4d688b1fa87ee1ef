//! Plain-text tables.

use std::fmt::Write;

use crate::dto::{
    CaseDto, ClassifyPayload, FusePayload, GroupDto, InvariantPayload, MaxCyclicPayload, OrbitDto, ReportDto,
    SimpleCurrentsPayload, SpectrumPayload, UnitarityPayload, WitnessDto,
};

/// `x` with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn orbit(o: &OrbitDto) -> String {
    format!("({},{})", o.l, o.m)
}

fn partner(o: &OrbitDto) -> String {
    format!("({},{})", o.partner[0], o.partner[1])
}

fn form(x: &[u32; 2]) -> String {
    format!("({},{})", x[0], x[1])
}

struct Table {
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(headers: &[&str]) -> Self {
        Table { rows: vec![headers.iter().map(|h| h.to_string()).collect()] }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn render(&self, out: &mut String) {
        let cols = self.rows[0].len();
        let widths: Vec<usize> =
            (0..cols).map(|c| self.rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
        for row in &self.rows {
            let line: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
            writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
        }
    }
}

pub fn spectrum(level: u32, p: &SpectrumPayload) -> String {
    let mut out = String::new();
    writeln!(out, "n = {level}, c = {}, {} orbits", p.central_charge, p.orbits.len()).unwrap();
    let mut t = Table::new(&["orbit", "partner", "h", "q", "omega", "omega(partner)", "d"]);
    for r in &p.orbits {
        t.push(vec![
            orbit(&r.orbit),
            partner(&r.orbit),
            r.h.to_string(),
            r.q.to_string(),
            r.omega[0].to_string(),
            r.omega[1].to_string(),
            sig12(r.d),
        ]);
    }
    t.render(&mut out);
    out
}

pub fn fuse(level: u32, p: &FusePayload) -> String {
    let mut out = String::new();
    writeln!(out, "n = {level}: {} x {}", orbit(&p.left), orbit(&p.right)).unwrap();
    writeln!(out, "{}", p.display).unwrap();
    let mut t = Table::new(&["orbit", "partner", "multiplicity"]);
    for term in &p.terms {
        t.push(vec![orbit(&term.orbit), partner(&term.orbit), term.multiplicity.to_string()]);
    }
    t.render(&mut out);
    out
}

fn group(out: &mut String, g: &GroupDto) {
    let gens: Vec<String> = g.generators.iter().map(form).collect();
    writeln!(out, "group: {} (order {}), generators <{}>", g.structure_display, g.order, gens.join(", "))
        .unwrap();
    let mut t = Table::new(&["written form", "orbit", "partner", "omega"]);
    for e in &g.elements {
        t.push(vec![form(&e.written_form), orbit(&e.orbit), partner(&e.orbit), e.omega.to_string()]);
    }
    t.render(out);
}

pub fn simple_currents(level: u32, p: &SimpleCurrentsPayload) -> String {
    let mut out = String::new();
    writeln!(out, "n = {level}: {} unit orbits", p.units.len()).unwrap();
    let mut t = Table::new(&["orbit", "form (0,m)", "omega", "form (n,m)", "omega"]);
    for u in &p.units {
        t.push(vec![
            orbit(&u.orbit),
            form(&u.forms[0].written_form),
            u.forms[0].omega.to_string(),
            form(&u.forms[1].written_form),
            u.forms[1].omega.to_string(),
        ]);
    }
    t.render(&mut out);
    out.push_str("written-form ");
    group(&mut out, &p.written_form_group);
    out
}

pub fn max_cyclic(level: u32, p: &MaxCyclicPayload) -> String {
    let mut out = String::new();
    match &p.analysis {
        CaseDto::Odd { p, generator } => {
            writeln!(out, "n = {level} odd: p = {p}, (n,1)^p = {}", form(generator)).unwrap()
        }
        CaseDto::ZeroModFour { p, top_phase } => {
            writeln!(out, "n = {level} = 0 mod 4: omega(n,0) exponent {top_phase}, p = {p}").unwrap()
        }
        CaseDto::TwoModFour {
            m,
            top_phase,
            half_phase,
            half_label_valid,
            identity_premises,
            identity_exponent,
            branch,
        } => {
            writeln!(out, "n = {level} = 2 mod 4: omega(n,0) exponent {top_phase}, M = {m}").unwrap();
            writeln!(
                out,
                "omega(0,M/2) exponent {half_phase} ({}), branch {branch}",
                if *half_label_valid { "valid label" } else { "formal, parity fails" }
            )
            .unwrap();
            writeln!(
                out,
                "omega(n,M/2) exponent {identity_exponent}, premises n/2 odd and M^2/(8(n+2)) odd: {identity_premises}"
            )
            .unwrap();
        }
    }
    group(&mut out, &p.group);
    out
}

fn report(out: &mut String, r: &ReportDto) {
    writeln!(out, "checks ({}): {}", r.scope, if r.passed { "passed" } else { "FAILED" }).unwrap();
    let mut t = Table::new(&["  check", "status", "witness"]);
    for c in &r.checks {
        let witness = match &c.witness {
            WitnessDto::None => String::new(),
            WitnessDto::Orbit { orbit: o } => orbit(o),
            WitnessDto::Count { expected, found } => format!("expected {expected}, found {found}"),
            WitnessDto::Index { value } => sig12(*value),
            WitnessDto::Entry { row, col, expected, found } => {
                format!("at [{}][{}] expected {expected}, found {found}", orbit(row), orbit(col))
            }
        };
        t.push(vec![format!("  {}", c.name), c.status.clone(), witness]);
    }
    t.render(out);
}

pub fn invariant(level: u32, p: &InvariantPayload) -> String {
    let mut out = String::new();
    writeln!(out, "n = {level}, {}", p.theta.provenance).unwrap();
    writeln!(out, "theta = {}", p.theta.display).unwrap();
    writeln!(out, "index = {}", sig12(p.theta.index)).unwrap();
    let support: Vec<String> = p
        .vacuum_row
        .iter()
        .filter(|e| e.z > 0)
        .map(|e| format!("Z(0,{}) = {}", orbit(&e.orbit), e.z))
        .collect();
    writeln!(out, "vacuum row: {}", support.join(", ")).unwrap();
    let off_diagonal: usize = p
        .alpha_matrix
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().filter(|&(j, &x)| j != i && x > 0).count())
        .sum();
    writeln!(
        out,
        "<theta lambda, mu>: {0}x{0} matrix, {off_diagonal} nonzero off-diagonal entries",
        p.alpha_matrix.len()
    )
    .unwrap();
    report(&mut out, &p.report);
    out
}

pub fn classify(level: u32, p: &ClassifyPayload) -> String {
    let mut out = String::new();
    writeln!(out, "== maximal current group").unwrap();
    out.push_str(&max_cyclic(level, &p.max_cyclic));
    for e in &p.entries {
        writeln!(out).unwrap();
        let within = match e.within_max_cyclic {
            Some(true) => ", inside maximal group",
            Some(false) => ", outside maximal group",
            None => "",
        };
        writeln!(out, "== {} [{}{within}]", e.id, e.kind).unwrap();
        writeln!(out, "theta = {}", e.theta.display).unwrap();
        writeln!(out, "index = {}", sig12(e.theta.index)).unwrap();
        let support: Vec<String> =
            e.vacuum_row.iter().map(|r| format!("Z(0,{}) = {}", orbit(&r.orbit), r.z)).collect();
        writeln!(out, "vacuum row: {}", support.join(", ")).unwrap();
        for note in &e.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        report(&mut out, &e.report);
    }
    out
}

pub fn unitarity(p: &UnitarityPayload) -> String {
    let mut out = String::new();
    write!(out, "c = {}, h = {}, q = {}: {}", p.c, p.h, p.q, p.class).unwrap();
    if let Some(w) = &p.witness {
        write!(out, " (n = {}, l = {}, m = {})", w.n, w.l, w.m).unwrap();
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(1.0), "1.00000000000");
        assert_eq!(sig12(2.0 + 3f64.sqrt()), "3.73205080757");
        assert_eq!(sig12(19.0811), "19.0811000000");
        assert_eq!(sig12(0.5), "0.500000000000");
        assert_eq!(sig12(0.0), "0");
    }
}
