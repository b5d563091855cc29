//! The `path-ideals` command line: `analyze`, `verify`, `family`,
//! `enumerate` and `oracle`.
//!
//! Exit status: 0 pass, 1 a check failed, 2 usage or input error, 3 only
//! bound-exceeded skips.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{self, make_family, FamilyName, FamilySpec};
use crate::graph::Graph;
use crate::hypergraph::{self, height_bight, nu_t};
use crate::ideal::SquareFreeIdeal;
use crate::oracle::{self, DiskCache, FieldSpec, Oracle};
use crate::splitting::{is_vertex_splittable, path_ideal};
use crate::verify::{self, SuiteConfig, Theorem};

#[derive(Parser, Debug)]
#[command(name = "path-ideals", version, about = "Invariants of t-path ideals of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariants of I_t(G) and the theorems that apply to G.
    Analyze(AnalyzeArgs),
    /// Run verification campaigns.
    Verify(VerifyArgs),
    /// Write a family graph.
    Family(FamilyArgs),
    /// Enumerate trees up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Betti table and invariants of an ideal.
    Oracle(OracleArgs),
}

#[derive(Args, Debug, Clone)]
pub struct OracleOpts {
    /// gf2, gfp:<p> or rational.
    #[arg(long, default_value = "gf2")]
    pub field: FieldSpec,
    /// Oracle variable bound.
    #[arg(long, default_value_t = oracle::BETTI_BOUND)]
    pub bound: usize,
    /// Directory of cached Betti tables; ignored when it does not exist.
    #[arg(long, env = oracle::cache::CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
}

impl OracleOpts {
    fn oracle(&self) -> Oracle {
        Oracle::new(self.field)
            .with_bound(self.bound)
            .with_cache(self.cache_dir.clone().and_then(DiskCache::open))
    }
}

#[derive(Args, Debug)]
#[group(id = "input", required = true, multiple = false)]
pub struct GraphInput {
    /// Graph file in the `graph <n>` text format.
    #[arg(long, group = "input")]
    pub graph: Option<PathBuf>,
    /// Family spec such as `Tt:4,3,3` or `path:7`.
    #[arg(long, group = "input")]
    pub family: Option<FamilySpec>,
}

impl GraphInput {
    fn load(&self) -> Result<(Graph, Option<FamilySpec>)> {
        match (&self.graph, &self.family) {
            (Some(p), _) => Ok((read_graph(p)?, None)),
            (None, Some(f)) => Ok((make_family(f)?, Some(f.clone()))),
            _ => Err(Error::invalid("input", "exactly one of --graph, --family")),
        }
    }
}

fn read_graph(p: &Path) -> Result<Graph> {
    Graph::from_text(&std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?)
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, default_value_t = 3)]
    pub t: usize,
    #[command(flatten)]
    pub oracle: OracleOpts,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Check groups to run (repeatable); default: all but conjectures.
    #[arg(long = "theorem")]
    pub theorems: Vec<Theorem>,
    /// Run the conjecture probes (alone unless --theorem is also given).
    #[arg(long)]
    pub conjectures: bool,
    /// Trees up to this many vertices.
    #[arg(long)]
    pub exhaustive: Option<usize>,
    /// Number of random chordal graphs.
    #[arg(long)]
    pub random: Option<usize>,
    /// Largest random chordal graph.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub caterpillars: Option<usize>,
    /// t for the conjecture probes.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub oracle: OracleOpts,
    /// Write the JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Write the CSV mirror here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Omit timings so that repeated runs give identical bytes.
    #[arg(long)]
    pub compare: bool,
    /// Replay the failing records of an earlier JSON report.
    #[arg(long)]
    pub replay: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Family name: path, cycle, star, complete, caterpillar, Tprime, Gt,
    /// Gtprime, Tt.
    #[arg(long)]
    pub name: Option<FamilyName>,
    /// Full spec such as `Tprime:4,2`; alternative to --name.
    #[arg(long, conflicts_with = "name")]
    pub spec: Option<FamilySpec>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Caterpillar leaf counts of the interior spine vertices.
    #[arg(long, value_delimiter = ',')]
    pub leaves: Vec<usize>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Trees on exactly this many vertices.
    #[arg(long)]
    pub trees: usize,
    /// Output directory (one file per tree); prints to stdout when absent.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// Ideal file in the `ideal <n>` text format.
    #[arg(long, conflicts_with_all = ["graph", "family"])]
    pub ideal: Option<PathBuf>,
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub family: Option<FamilySpec>,
    /// t for graph inputs.
    #[arg(long, default_value_t = 3)]
    pub t: usize,
    #[command(flatten)]
    pub oracle: OracleOpts,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (including the program name) and runs the command,
/// writing to `out`; errors go to stderr. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                eprint!("{e}");
                return verify::EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BoundExceeded { .. } => verify::EXIT_SKIPPED,
                _ => verify::EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Analyze(a) => cmd_analyze(&a, out),
        Command::Verify(v) => cmd_verify(&v, out),
        Command::Family(f) => cmd_family(&f, out),
        Command::Enumerate(e) => cmd_enumerate(&e, out),
        Command::Oracle(o) => cmd_oracle(&o, out),
    }
}

fn w(out: &mut dyn Write, s: impl AsRef<str>) -> Result<()> {
    out.write_all(s.as_ref().as_bytes())
        .map_err(|e| Error::io("<stdout>", e))
}

/// One theorem or formula evaluated on the analysed instance.
fn formula(name: &str, applies: bool, lhs: Value, rhs: Value, note: Option<&str>) -> Value {
    let mut v = json!({
        "formula": name,
        "applies": applies,
        "lhs": lhs,
        "rhs": rhs,
        "holds": lhs == rhs,
    });
    if let Some(n) = note {
        v["note"] = json!(n);
    }
    v
}

/// Everything `analyze` reports, as JSON.
pub fn analyze(g: &Graph, family: Option<&FamilySpec>, t: usize, o: &Oracle) -> Result<Value> {
    if t < 2 {
        return Err(Error::invalid("t", format!("t ≥ 2 (got {t})")));
    }
    let i = path_ideal(g, t)?;
    let report = o.report(&i)?;
    let nu = nu_t(g, t)?;
    let dual = i.alexander_dual()?;
    let dual_vs = match is_vertex_splittable(&dual) {
        Ok((vs, _)) => json!(vs),
        Err(Error::BoundExceeded { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let dual_cwl = match o.componentwise_linear(&dual) {
        Ok(c) => json!(c),
        Err(Error::BoundExceeded { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let chordal = g.chordal();
    let tree = g.is_tree();
    let caterpillar = g.is_caterpillar();
    let mut formulas = vec![
        formula(
            "reg(R/I_3(G)) = 2·nu_3(G) for chordal G",
            chordal && t == 3,
            json!(report.reg),
            json!(2 * nu),
            None,
        ),
        formula(
            "pd(R/I_3(G)) = bight(I_3(G)) for chordal G",
            chordal && t == 3,
            json!(report.pd),
            json!(report.bight),
            None,
        ),
        formula(
            "R/I_3(G) Cohen-Macaulay iff unmixed, for chordal G",
            chordal && t == 3,
            json!(report.cm),
            json!(report.unmixed),
            None,
        ),
        formula(
            "I_3(T)^dual vertex splittable for trees T",
            tree && t == 3,
            dual_vs.clone(),
            json!(true),
            None,
        ),
        formula(
            "reg(R/I_t(G)) = (t-1)·nu_t(G) for caterpillars G",
            caterpillar,
            json!(report.reg),
            json!((t - 1) * nu),
            None,
        ),
        formula(
            "reg(R/I_t(G)) >= (t-1)·nu_t(G)",
            true,
            json!(report.reg >= (t - 1) * nu),
            json!(true),
            None,
        ),
        formula(
            "pd(R/I_t(G)) >= bight(I_t(G))",
            true,
            json!(report.pd >= report.bight),
            json!(true),
            None,
        ),
    ];
    if i.n() <= 14 {
        formulas.push(formula(
            "pd(R/I) = reg(I^dual)",
            true,
            json!(report.pd),
            json!(if i.is_zero() { 0 } else { o.reg(&dual)? + 1 }),
            None,
        ));
    }
    if let Some(f) = family {
        let p = &f.params;
        match f.name {
            FamilyName::Tt if t == p[0] => {
                formulas.push(formula(
                    "pd(R/I_t(T_t)) = n+m-1",
                    true,
                    json!(report.pd),
                    json!(p[1] + p[2] - 1),
                    None,
                ));
                formulas.push(formula(
                    "bight(I_t(T_t)) = max{n,m}",
                    true,
                    json!(report.bight),
                    json!(p[1].max(p[2])),
                    None,
                ));
                formulas.push(formula(
                    "pd = bight",
                    true,
                    json!(report.pd),
                    json!(report.bight),
                    Some("expected to fail when n, m ≥ 2: this family has a designed gap"),
                ));
            }
            FamilyName::Gt if t == p[0] => {
                formulas.push(formula("pd(R/I_t(G_t)) = 3", true, json!(report.pd), json!(3), None));
                formulas.push(formula("bight(I_t(G_t)) = 3", true, json!(report.bight), json!(3), None));
                formulas.push(formula(
                    "I_t(G_t)^dual componentwise linear",
                    true,
                    dual_cwl.clone(),
                    json!(true),
                    Some("expected to fail: the dual is not componentwise linear"),
                ));
            }
            FamilyName::Tprime if t == p[0] => {
                formulas.push(formula("nu_t(T'_t) = 1", true, json!(nu), json!(1), None));
                formulas.push(formula(
                    "reg(R/I_t(T'_t)) >= k",
                    true,
                    json!(report.reg >= p[1]),
                    json!(true),
                    None,
                ));
            }
            _ => {}
        }
    }
    Ok(json!({
        "graph": { "n": g.n(), "edges": g.edge_count(), "family": family.map(ToString::to_string) },
        "t": t,
        "classes": { "chordal": chordal, "tree": tree, "caterpillar": caterpillar },
        "generators": i.gens().len(),
        "report": report,
        "nu_t": nu,
        "dual": dual.to_string(),
        "dual_vertex_splittable": dual_vs,
        "dual_componentwise_linear": dual_cwl,
        "formulas": formulas,
    }))
}

fn cmd_analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32> {
    let (g, family) = a.input.load()?;
    let v = analyze(&g, family.as_ref(), a.t, &a.oracle.oracle())?;
    if a.json {
        w(out, format!("{}\n", serde_json::to_string_pretty(&v)?))?;
        return Ok(0);
    }
    let r = &v["report"];
    let mut s = String::new();
    s += &format!(
        "graph: n = {}, {} edges{}\n",
        g.n(),
        g.edge_count(),
        family.map(|f| format!(" ({f})")).unwrap_or_default()
    );
    s += &format!(
        "classes: chordal = {}, tree = {}, caterpillar = {}\n",
        v["classes"]["chordal"], v["classes"]["tree"], v["classes"]["caterpillar"]
    );
    s += &format!("I_{}(G): {} generators, field {}\n", a.t, v["generators"], r["field"].as_str().unwrap_or(""));
    for key in ["reg", "pd", "depth", "dim", "ht", "bight", "cm", "unmixed", "linear_resolution"] {
        s += &format!("  {key} = {}\n", r[key]);
    }
    s += &format!("  nu_t = {}\n", v["nu_t"]);
    s += &format!("dual: {}\n", v["dual"].as_str().unwrap_or(""));
    s += &format!(
        "  vertex splittable = {}, componentwise linear = {}\n",
        v["dual_vertex_splittable"], v["dual_componentwise_linear"]
    );
    s += "formulas:\n";
    for f in v["formulas"].as_array().into_iter().flatten() {
        let status = if f["applies"] == json!(false) {
            "n/a"
        } else if f["holds"] == json!(true) {
            "holds"
        } else {
            "FAILS"
        };
        s += &format!("  [{status}] {} ({} vs {})", f["formula"].as_str().unwrap_or(""), f["lhs"], f["rhs"]);
        if let Some(n) = f["note"].as_str() {
            s += &format!(" - {n}");
        }
        s += "\n";
    }
    w(out, s)?;
    Ok(0)
}

fn cmd_verify(v: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut c = SuiteConfig {
        theorems: v.theorems.clone(),
        field: v.oracle.field,
        bound: v.oracle.bound,
        ..Default::default()
    };
    if v.conjectures {
        c.theorems.push(Theorem::Conjectures);
    }
    if let Some(n) = v.exhaustive {
        c.exhaustive = n;
        c.conjecture_n = n;
    }
    if let Some(r) = v.random {
        c.random = r;
    }
    if let Some(n) = v.n {
        c.n = n;
    }
    if let Some(k) = v.caterpillars {
        c.caterpillars = k;
    }
    if let Some(t) = v.t {
        c.conjecture_t = t;
    }
    if let Some(s) = v.seed {
        c.seed = s;
    }
    let o = c.oracle().with_cache(v.oracle.cache_dir.clone().and_then(DiskCache::open));
    if let Some(path) = &v.replay {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let old: verify::Report = serde_json::from_str(&text)?;
        let mut code = 0;
        for r in old.failures() {
            let again = verify::replay(r, &o)?;
            w(out, format!("{} {} -> {:?}\n", r.id, r.instance.description, again.verdict))?;
            if again.verdict == verify::Verdict::Fail {
                code = verify::EXIT_FAIL;
            }
        }
        return Ok(code);
    }
    let report = verify::run_suite(&c)?;
    if let Some(p) = &v.json {
        report.write_json(p, v.compare)?;
    }
    if let Some(p) = &v.csv {
        report.write_csv(p)?;
    }
    let mut s = String::new();
    for (id, n) in &report.summary.by_check {
        s += &format!("{id:<24} pass {:>5}  fail {:>3}  skipped {:>3}\n", n.pass, n.fail, n.skipped);
    }
    for f in report.failures() {
        s += &format!("FAIL {} on {} ({})\n", f.id, f.instance.description, f.instance.hash);
    }
    for p in report
        .results
        .iter()
        .filter(|r| r.is_probe() && r.verdict == verify::Verdict::Fail)
    {
        s += &format!("candidate counterexample: {} ({})\n", p.instance.description, p.instance.hash);
    }
    let sm = &report.summary;
    s += &format!(
        "checks: {} pass, {} fail, {} skipped; probes: {} pass, {} fail\n",
        sm.checks.pass, sm.checks.fail, sm.checks.skipped, sm.probes.pass, sm.probes.fail
    );
    w(out, s)?;
    Ok(report.exit_code())
}

fn family_spec(f: &FamilyArgs) -> Result<FamilySpec> {
    if let Some(s) = &f.spec {
        return Ok(s.clone());
    }
    let name = f
        .name
        .ok_or_else(|| Error::invalid("family", "give --name or --spec"))?;
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::invalid(name.as_str(), format!("--{flag} is required")))
    };
    let size = f.n.or(f.t);
    Ok(match name {
        FamilyName::Path => FamilySpec::path(need(size, "n")?),
        FamilyName::Cycle => FamilySpec::cycle(need(size, "n")?),
        FamilyName::Complete => FamilySpec::complete(need(size, "n")?),
        FamilyName::Star => FamilySpec::star(need(f.m.or(f.n), "m")?),
        FamilyName::Caterpillar => FamilySpec::caterpillar(&f.leaves),
        FamilyName::Tprime => FamilySpec::tprime(need(f.t, "t")?, need(f.k, "k")?),
        FamilyName::Gt => FamilySpec::gt(need(f.t, "t")?),
        FamilyName::Gtprime => FamilySpec::gtprime(need(f.t, "t")?),
        FamilyName::Tt => FamilySpec::tt(need(f.t, "t")?, need(f.n, "n")?, need(f.m, "m")?),
    })
}

fn cmd_family(f: &FamilyArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = family_spec(f)?;
    let g = make_family(&spec)?;
    let text = format!("# {spec}\n{}", g.to_text());
    match &f.out {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| Error::io(p, e))?;
            w(out, format!("wrote {} ({} vertices)\n", p.display(), g.n()))?;
        }
        None => w(out, text)?,
    }
    Ok(0)
}

fn cmd_enumerate(e: &EnumerateArgs, out: &mut dyn Write) -> Result<i32> {
    let trees = families::enumerate_trees(e.trees)?;
    match &e.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|err| Error::io(dir, err))?;
            for (k, g) in trees.iter().enumerate() {
                let p = dir.join(format!("tree_{}_{:03}.txt", e.trees, k + 1));
                std::fs::write(&p, g.to_text()).map_err(|err| Error::io(&p, err))?;
            }
            w(out, format!("wrote {} trees to {}\n", trees.len(), dir.display()))?;
        }
        None => {
            for (k, g) in trees.iter().enumerate() {
                w(out, format!("# tree {} of {}\n{}\n", k + 1, trees.len(), g.to_text()))?;
            }
        }
    }
    Ok(0)
}

fn cmd_oracle(a: &OracleArgs, out: &mut dyn Write) -> Result<i32> {
    let i = match (&a.ideal, &a.graph, &a.family) {
        (Some(p), _, _) => SquareFreeIdeal::read(p)?,
        (None, Some(p), _) => path_ideal(&read_graph(p)?, a.t)?,
        (None, None, Some(f)) => path_ideal(&make_family(f)?, a.t)?,
        _ => return Err(Error::invalid("input", "one of --ideal, --graph, --family")),
    };
    let o = a.oracle.oracle();
    let table = o.betti(&i)?;
    let report = oracle::report_from_table(&i, &table)?;
    if a.json {
        let v = json!({ "ideal": i.to_string(), "betti": table, "report": report });
        w(out, format!("{}\n", serde_json::to_string_pretty(&v)?))?;
        return Ok(0);
    }
    let (ht, bight) = height_bight(i.hypergraph())?;
    let mut s = format!("ideal: {i}\nfield: {}\n{}", table.field(), table.to_macaulay());
    s += &format!(
        "reg = {}, pd = {}, depth = {}, dim = {}, ht = {ht}, bight = {bight}\n",
        report.reg, report.pd, report.depth, report.dim
    );
    s += &format!(
        "cm = {}, unmixed = {}, linear resolution = {}\n",
        report.cm, report.unmixed, report.linear_resolution
    );
    if i.n() <= hypergraph::MATCHING_BOUND {
        let (nu, _) = hypergraph::max_induced_matching(i.hypergraph())?;
        s += &format!("induced matching number = {nu}\n");
    }
    w(out, s)?;
    Ok(0)
}
