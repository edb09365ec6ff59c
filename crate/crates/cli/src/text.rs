//! Human-readable projections of the reports. Every field of the JSON form
//! appears here, so the two carry the same data.

use std::fmt::Write;

use crate::report::{AnalysisReport, FamilySummary, GroupInfo, OracleInfo, SweepReport, VerificationReport};

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn group_header(out: &mut String, g: &GroupInfo) {
    writeln!(
        out,
        "BD_{}({}): order {}, n = {}, q = {}, k = {}, {}",
        g.two_n,
        g.a,
        g.order,
        g.n,
        g.q,
        g.k,
        if g.small { "small" } else { "not small" }
    )
    .unwrap();
    let qr = if g.quasireflections.is_empty() { "none".to_owned() } else { join(&g.quasireflections, ", ") };
    writeln!(out, "quasireflections alpha^i*beta for i in: {qr}").unwrap();
}

fn oracle_line(o: &OracleInfo) -> String {
    let dim = o.quotient_dim.map_or("infinite".to_owned(), |d| d.to_string());
    match &o.failure {
        None => format!("G-cluster, quotient dimension {dim}"),
        Some(f) => format!("NOT a G-cluster, quotient dimension {dim}: {f}"),
    }
}

fn families(out: &mut String, f: &FamilySummary) {
    writeln!(out, "walking families (seed {}, {} samples each): {}", f.seed, f.samples_per_family, verdict(f.passed)).unwrap();
    for fam in &f.families {
        let mid = fam.midpoint.map_or(String::new(), |m| format!(", midpoint {}", if m { "ok" } else { "wrong" }));
        writeln!(
            out,
            "  {:<10} endpoints {}/{}{mid}, scale invariant {}, samples {}/{}: {}",
            fam.kind,
            if fam.first_endpoint { "ok" } else { "wrong" },
            if fam.second_endpoint { "ok" } else { "wrong" },
            if fam.scale_invariant { "yes" } else { "no" },
            fam.samples_passed,
            fam.samples,
            verdict(fam.passed)
        )
        .unwrap();
    }
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    writeln!(out, "schema {}", r.schema_version).unwrap();
    group_header(&mut out, &r.group);
    writeln!(out, "continued fraction {}/{} = [{}]", r.group.two_n, r.group.a, join(&r.continued_fraction, ", ")).unwrap();
    let boundary: Vec<String> = r.boundary.iter().map(|p| format!("({},{})", p[0], p[1])).collect();
    writeln!(out, "boundary: {}", boundary.join(" ")).unwrap();
    let fl = &r.fixed_locus;
    let opt = |v: Option<u64>| v.map_or("-".to_owned(), |v| v.to_string());
    writeln!(
        out,
        "fixed locus: q = {}, j = {}, b_m = {}: {} ({})",
        opt(fl.q),
        opt(fl.j),
        opt(fl.middle_entry),
        fl.fixed,
        if fl.small { "small" } else { "not small" }
    )
    .unwrap();
    writeln!(out).unwrap();
    writeln!(out, "G-graphs ({}):", r.graphs.len()).unwrap();
    for (i, g) in r.graphs.iter().enumerate() {
        writeln!(
            out,
            "  [{i}] {} ({},{}) -> ({},{}), transition type {}",
            g.kind, g.first[0], g.first[1], g.second[0], g.second[1], g.transition
        )
        .unwrap();
        writeln!(out, "      generators: {}", g.generators.join(", ")).unwrap();
        let twins: Vec<String> = g.twins.iter().map(|t| format!("{} = {} * {}", t.first, t.ratio, t.second)).collect();
        let twins = if twins.is_empty() { "none".to_owned() } else { twins.join("; ") };
        writeln!(out, "      basis: {} ({} cells), twins: {twins}", g.basis_size, g.basis_cells).unwrap();
        writeln!(out, "      oracle: {}", oracle_line(&g.oracle)).unwrap();
        let content: Vec<String> = g.rep_content.iter().map(|c| format!("{} x{}", c.irrep, c.multiplicity)).collect();
        writeln!(out, "      I/mI: {}", content.join(", ")).unwrap();
    }
    writeln!(out).unwrap();
    writeln!(
        out,
        "Dynkin diagram: chain [{}], horns [{}] ({} vertices)",
        join(&r.dynkin.chain, ", "),
        join(&r.dynkin.horns, ", "),
        r.dynkin.vertex_count
    )
    .unwrap();
    let cycle: Vec<String> = r.fundamental_cycle.iter().map(|c| format!("{}={}", c.vertex, c.coefficient)).collect();
    writeln!(out, "fundamental cycle: {}", cycle.join(" ")).unwrap();
    writeln!(out, "special representations:").unwrap();
    for s in &r.specials {
        writeln!(out, "  {:<3} {:<10} dim {}  {}", s.vertex, s.irrep, s.dim, s.conventional).unwrap();
    }
    writeln!(out).unwrap();
    families(&mut out, &r.families);
    writeln!(out, "verdict: {}", verdict(r.passed)).unwrap();
    for render in &r.renders {
        writeln!(out).unwrap();
        out.push_str(render);
    }
    out
}

pub fn verification(r: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "schema {}", r.schema_version).unwrap();
    group_header(&mut out, &r.group);
    for g in &r.graphs {
        writeln!(out, "  {:<3} {}: {}", g.kind, g.generators.join(", "), oracle_line(&g.oracle)).unwrap();
    }
    families(&mut out, &r.families);
    writeln!(out, "samples checked: {}", r.samples_checked).unwrap();
    writeln!(out, "verdict: {}", verdict(r.passed)).unwrap();
    out
}

pub fn sweep(r: &SweepReport) -> String {
    let mut out = String::new();
    writeln!(out, "schema {}", r.schema_version).unwrap();
    writeln!(out, "small binary dihedral groups with 2n <= {}: {}", r.max_two_n, r.groups.len()).unwrap();
    for g in &r.groups {
        writeln!(
            out,
            "  BD_{}({}) q = {} [{}] graphs {} specials {} dims [{}] cycle [{}]: {}",
            g.two_n,
            g.a,
            g.q,
            join(&g.continued_fraction, ","),
            g.graph_kinds.join(","),
            g.specials.join(","),
            join(&g.special_dims, ","),
            join(&g.fundamental_cycle, ","),
            verdict(g.passed)
        )
        .unwrap();
    }
    writeln!(out, "rejects: {}", r.rejects.len()).unwrap();
    for rej in &r.rejects {
        let qr = if rej.quasireflections.is_empty() {
            String::new()
        } else {
            format!(" quasireflections [{}]", join(&rej.quasireflections, ","))
        };
        writeln!(out, "  BD_{}({}) {}{qr}", rej.two_n, rej.a, rej.reason).unwrap();
    }
    writeln!(out, "verdict: {}", verdict(r.passed)).unwrap();
    out
}
