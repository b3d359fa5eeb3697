//! Command-line front end for `branchcob`.
//!
//! [`run`] parses an argument vector, dispatches to the core library and
//! returns the process exit code: 0 for success or a positive decision, 1 for
//! a negative decision, 2 for usage errors and 3 for invalid input documents.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use branchcob::cob2::{self, CobError, DEFAULT_SEARCH_BUDGET};
use branchcob::homology::{self, BoundaryMap};
use branchcob::hurwitz::HurwitzError;
use branchcob::ranks::{self, RankQuery};
use branchcob::search::{self, EnumSpec, SearchError};
use branchcob::{BigInt, BranchedCoveringSet, ClassVector, CoveringDocument, FGAbelianGroup, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "branchcob", version, about = "Cobordism of simple branched coverings")]
pub struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct DegreeMode {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub mode: Mode,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank of the cobordism group in dimension n.
    Rank {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        dm: DegreeMode,
    },
    /// Ranks for n = 0..=n-max.
    RankTable {
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        dm: DegreeMode,
    },
    /// Invariant factors of Cob(2, k) and the basis vectors g_i.
    Group {
        #[command(flatten)]
        dm: DegreeMode,
    },
    /// Exact-sequence computation of Cob(2, k).
    Homology {
        #[command(flatten)]
        dm: DegreeMode,
    },
    /// Check a covering document.
    Validate { file: PathBuf },
    /// Invariant vector c_2, .., c_k of a covering document.
    Invariants { file: PathBuf },
    /// Euler characteristic and genus of every source component.
    Euler { file: PathBuf },
    /// Decide whether two coverings are cobordant.
    Cobordant { a: PathBuf, b: PathBuf },
    /// Coordinates of a class vector in the g_i basis.
    Decompose {
        #[command(flatten)]
        dm: DegreeMode,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// A covering with the given invariant vector.
    Realize {
        #[command(flatten)]
        dm: DegreeMode,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Build from torus witnesses with the fewest singular points.
        #[arg(long)]
        minimal: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Sphere witness for the basis vector g_i.
    Generator {
        #[arg(long)]
        i: usize,
        #[command(flatten)]
        dm: DegreeMode,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Stream monodromy data as JSON lines.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        points: usize,
        /// Allowed cycle lengths, comma separated.
        #[arg(long, value_delimiter = ',')]
        types: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long)]
        transitive: bool,
        /// One representative per relabelling class.
        #[arg(long)]
        reduce: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "so")]
        mode: Mode,
        /// Lift the default size limits.
        #[arg(long)]
        allow_large: bool,
    },
    /// Exhaustive checks over coverings of the sphere.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        r_max: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn invalid(message: impl ToString) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.to_string(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::usage(format!("{e:#}"))
    }
}

impl From<CobError> for Failure {
    fn from(e: CobError) -> Self {
        match e {
            CobError::NotInImage => Failure {
                code: EXIT_NEGATIVE,
                message: format!("NotInImage: {e}"),
            },
            CobError::Covering(h) => h.into(),
            other => Failure::usage(other),
        }
    }
}

impl From<HurwitzError> for Failure {
    fn from(e: HurwitzError) -> Self {
        match e {
            HurwitzError::Invalid(vs) => Failure::invalid(violation_lines(&vs)),
            other => Failure::invalid(other),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        Failure::usage(e)
    }
}

fn violation_lines(vs: &[branchcob::hurwitz::LocatedViolation]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    json: bool,
    threads: usize,
}

impl Io<'_> {
    fn line(&mut self, text: impl AsRef<str>) -> Result<(), Failure> {
        writeln!(self.out, "{}", text.as_ref()).map_err(|e| Failure::usage(format!("writing output: {e}")))
    }

    fn value(&mut self, v: &Value) -> Result<(), Failure> {
        self.line(serde_json::to_string(v).expect("JSON values serialize"))
    }

    /// Read a document from `path`, or from standard input for `-`.
    fn read_document(&mut self, path: &Path) -> Result<CoveringDocument, Failure> {
        let text = if path == Path::new("-") {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
            s
        } else {
            fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::from)?
        };
        CoveringDocument::from_json(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
    }

    fn read_set(&mut self, path: &Path) -> Result<BranchedCoveringSet, Failure> {
        self.read_document(path)?
            .to_set()
            .map_err(|vs| Failure::invalid(violation_lines(&vs)))
    }

    /// Pretty document on stdout, or into `output`.
    fn write_document(&mut self, set: &BranchedCoveringSet, output: Option<&Path>) -> Result<(), Failure> {
        let text = CoveringDocument::from(set).to_json_pretty();
        match output {
            Some(path) => fs::write(path, text + "\n")
                .with_context(|| format!("writing {}", path.display()))
                .map_err(Failure::from),
            None => self.line(text),
        }
    }
}

/// Parse `args` (including the program name) and execute. Normal output goes
/// to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if cli.threads == 0 {
        let _ = writeln!(err, "error: --threads must be at least 1");
        return EXIT_USAGE;
    }
    let mut io = Io {
        stdin,
        out,
        json: cli.json,
        threads: cli.threads,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, Failure> {
    match command {
        Command::Rank { n, dm } => rank(io, n, dm),
        Command::RankTable { n_max, dm } => rank_table(io, n_max, dm),
        Command::Group { dm } => group(io, dm),
        Command::Homology { dm } => homology_trace(io, dm),
        Command::Validate { file } => validate(io, &file),
        Command::Invariants { file } => invariants(io, &file),
        Command::Euler { file } => euler(io, &file),
        Command::Cobordant { a, b } => cobordant(io, &a, &b),
        Command::Decompose { dm, c } => decompose(io, dm, &c),
        Command::Realize {
            dm,
            c,
            minimal,
            output,
        } => {
            let c = ClassVector::parse(dm.k, dm.mode, &c)?;
            let set = if minimal {
                cob2::realize_minimal(&c, DEFAULT_SEARCH_BUDGET)?
            } else {
                cob2::realize(&c)?
            };
            io.write_document(&set, output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Generator { i, dm, output } => {
            let set = cob2::generator(i, dm.k, dm.mode)?;
            io.write_document(&set, output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            k,
            points,
            types,
            genus,
            transitive,
            reduce,
            count_only,
            mode,
            allow_large,
        } => {
            let spec = EnumSpec {
                genus,
                transitive,
                reduce_symmetry: reduce,
                mode,
                allow_large,
                ..EnumSpec::sphere(k, points).with_types(&types)
            };
            enumerate(io, &spec, count_only)
        }
        Command::Verify { k, r_max } => verify(io, k, r_max),
    }
}

fn check_degree(k: usize) -> Result<(), Failure> {
    if k < 2 {
        return Err(Failure::usage(format!("degree {k} is below 2")));
    }
    Ok(())
}

fn rank_row(q: RankQuery) -> Value {
    let b = ranks::rank_cob(q);
    json!({
        "n": q.n,
        "k": q.k,
        "mode": q.mode,
        "total": b.total.to_string().parse::<Value>().expect("integer literal"),
        "summands": {
            "bordism_of_target": b.bordism_of_target.to_string().parse::<Value>().expect("integer literal"),
            "singular_summand": b.singular_summand.to_string().parse::<Value>().expect("integer literal"),
            "multiplicity": b.multiplicity.to_string().parse::<Value>().expect("integer literal"),
        },
    })
}

fn rank(io: &mut Io, n: usize, dm: DegreeMode) -> Result<i32, Failure> {
    check_degree(dm.k)?;
    let q = RankQuery { n, k: dm.k, mode: dm.mode };
    if io.json {
        io.value(&rank_row(q))?;
    } else {
        io.line(ranks::rank_cob(q).total.to_string())?;
    }
    Ok(EXIT_OK)
}

fn rank_table(io: &mut Io, n_max: usize, dm: DegreeMode) -> Result<i32, Failure> {
    check_degree(dm.k)?;
    let queries: Vec<RankQuery> = (0..=n_max).map(|n| RankQuery { n, k: dm.k, mode: dm.mode }).collect();
    if io.json {
        io.value(&Value::Array(queries.into_iter().map(rank_row).collect()))?;
        return Ok(EXIT_OK);
    }
    let rows: Vec<[String; 5]> = queries
        .iter()
        .map(|&q| {
            let b = ranks::rank_cob(q);
            [
                q.n.to_string(),
                b.total.to_string(),
                b.bordism_of_target.to_string(),
                b.multiplicity.to_string(),
                b.singular_summand.to_string(),
            ]
        })
        .collect();
    let header = ["n", "rank", "target", "mult", "singular"];
    let widths: Vec<usize> = (0..5)
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap())
        .collect();
    let fmt_row = |cells: [&str; 5]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    io.line(format!("# k = {}, mode = {}", dm.k, dm.mode))?;
    io.line(fmt_row(header))?;
    for r in &rows {
        io.line(fmt_row([&r[0], &r[1], &r[2], &r[3], &r[4]]))?;
    }
    Ok(EXIT_OK)
}

fn homology_result(dm: &DegreeMode) -> Result<homology::HomologyTrace, Failure> {
    homology::h2_classifying(dm.k, dm.mode).map_err(Failure::usage)
}

fn group(io: &mut Io, dm: DegreeMode) -> Result<i32, Failure> {
    check_degree(dm.k)?;
    let trace = homology_result(&dm)?;
    let first = if dm.mode == Mode::Oriented { 2 } else { 3 };
    let basis: Vec<(usize, ClassVector)> = (first..=dm.k)
        .map(|i| Ok((i, cob2::basis_vector(i, dm.k, dm.mode)?)))
        .collect::<Result<_, CobError>>()?;
    if io.json {
        io.value(&json!({
            "k": dm.k,
            "mode": dm.mode,
            "group": trace.result.to_string(),
            "invariant_factors": trace.result,
            "basis": basis.iter().map(|(i, g)| json!({"i": i, "vector": g.entries()})).collect::<Vec<_>>(),
        }))?;
    } else {
        io.line(format!("Cob(2,{}) [{}] = {}", dm.k, dm.mode, trace.result))?;
        for (i, g) in &basis {
            io.line(format!("g_{i} = {g}"))?;
        }
    }
    Ok(EXIT_OK)
}

fn cell_value(cell: &Option<BigInt>) -> Value {
    match cell {
        None => Value::Null,
        Some(v) => match i64::try_from(v) {
            Ok(x) => json!(x),
            Err(_) => json!(v.to_string()),
        },
    }
}

fn boundary_json(d: &BoundaryMap) -> Value {
    json!({
        "source": d.source.iter().map(|(j, g)| json!({"j": j, "group": g.to_string()})).collect::<Vec<_>>(),
        "target": d.target.to_string(),
        "matrix": d.matrix_cells().iter().map(|row| row.iter().map(cell_value).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn boundary_lines(name: &str, d: &BoundaryMap) -> Vec<String> {
    let cols: Vec<String> = d.source.iter().map(|(j, g)| format!("j={j}:{g}")).collect();
    let mut lines = vec![format!("{name}: {} -> {}", cols.join(" "), d.target)];
    let cells = d.matrix_cells();
    if cells.is_empty() {
        lines.push("  (no rows)".to_string());
    }
    for row in cells {
        let entries: Vec<String> = row
            .iter()
            .map(|c| c.as_ref().map_or_else(|| "?".to_string(), ToString::to_string))
            .collect();
        lines.push(format!("  [{}]", entries.join(" ")));
    }
    lines
}

fn homology_trace(io: &mut Io, dm: DegreeMode) -> Result<i32, Failure> {
    check_degree(dm.k)?;
    let t = homology_result(&dm)?;
    let inst = &t.instance;
    let terms: [(&str, FGAbelianGroup); 5] = [
        ("relative_h3", inst.relative_h3()),
        ("fiber_h2", inst.fiber_h2().clone()),
        ("classifying_h2", t.result.clone()),
        ("relative_h2", inst.relative_h2()),
        ("fiber_h1", inst.fiber_h1().clone()),
    ];
    if io.json {
        let terms_json: serde_json::Map<String, Value> =
            terms.iter().map(|(n, g)| (n.to_string(), json!(g.to_string()))).collect();
        io.value(&json!({
            "k": dm.k,
            "mode": dm.mode,
            "terms": terms_json,
            "d3": boundary_json(&inst.d3),
            "d2": boundary_json(&inst.d2),
            "kernel_d2": t.kernel_d2.to_string(),
            "image_d3_lower_bound": t.image_d3_lower_bound.to_string(),
            "image_alpha_bound": t.image_alpha_bound.to_string(),
            "result": t.result.to_string(),
            "invariant_factors": t.result,
        }))?;
        return Ok(EXIT_OK);
    }
    io.line(format!("k = {}, mode = {}", dm.k, dm.mode))?;
    io.line(format!(
        "{} --d3--> {} --> H_2 --> {} --d2--> {}",
        terms[0].1, terms[1].1, terms[3].1, terms[4].1
    ))?;
    for l in boundary_lines("d3", &inst.d3).into_iter().chain(boundary_lines("d2", &inst.d2)) {
        io.line(l)?;
    }
    io.line(format!("Im d3 >= {}", t.image_d3_lower_bound))?;
    io.line(format!("H_2(BS_k) / Im d3 = {}", t.image_alpha_bound))?;
    io.line(format!("Ker d2 = {}", t.kernel_d2))?;
    io.line(format!("H_2 = {}", t.result))?;
    Ok(EXIT_OK)
}

fn validate(io: &mut Io, file: &Path) -> Result<i32, Failure> {
    let doc = io.read_document(file)?;
    match doc.to_set() {
        Ok(_) => {
            if io.json {
                io.value(&json!({"valid": true, "violations": []}))?;
            } else {
                io.line("valid")?;
            }
            Ok(EXIT_OK)
        }
        Err(vs) => {
            if io.json {
                io.value(&json!({
                    "valid": false,
                    "violations": vs.iter().map(|v| json!({"component": v.component, "message": v.violation.to_string()})).collect::<Vec<_>>(),
                }))?;
            } else {
                io.line(violation_lines(&vs))?;
            }
            Ok(EXIT_INVALID)
        }
    }
}

fn invariants(io: &mut Io, file: &Path) -> Result<i32, Failure> {
    let set = io.read_set(file)?;
    let c = cob2::invariant(&set)?;
    if io.json {
        io.value(&json!({"degree": c.degree(), "mode": c.mode(), "c": c.entries()}))?;
    } else {
        io.line(c.to_string())?;
    }
    Ok(EXIT_OK)
}

fn euler(io: &mut Io, file: &Path) -> Result<i32, Failure> {
    let set = io.read_set(file)?;
    let topo = set.euler_characteristics()?;
    if io.json {
        let rows: Vec<Value> = topo
            .iter()
            .enumerate()
            .flat_map(|(c, comps)| {
                comps.iter().map(move |t| {
                    json!({
                        "component": c,
                        "sheets": t.sheets,
                        "euler_characteristic": t.euler_characteristic,
                        "genus": t.genus,
                    })
                })
            })
            .collect();
        io.value(&Value::Array(rows))?;
    } else {
        for (c, comps) in topo.iter().enumerate() {
            for t in comps {
                io.line(format!(
                    "component {c}: sheets {:?} chi = {} genus = {}",
                    t.sheets, t.euler_characteristic, t.genus
                ))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cobordant(io: &mut Io, a: &Path, b: &Path) -> Result<i32, Failure> {
    let a = io.read_set(a)?;
    let b = io.read_set(b)?;
    let same = cob2::cobordant(&a, &b)?;
    if io.json {
        io.value(&json!({
            "cobordant": same,
            "invariants": [cob2::invariant(&a)?.entries(), cob2::invariant(&b)?.entries()],
        }))?;
    } else {
        io.line(if same { "cobordant" } else { "not cobordant" })?;
    }
    Ok(if same { EXIT_OK } else { EXIT_NEGATIVE })
}

fn decompose(io: &mut Io, dm: DegreeMode, c: &str) -> Result<i32, Failure> {
    let c = ClassVector::parse(dm.k, dm.mode, c)?;
    match cob2::decompose(&c) {
        Ok(lambda) => {
            if io.json {
                io.value(&json!({
                    "in_image": true,
                    "coefficients": lambda.indices().map(|i| json!({"i": i, "lambda": lambda.get(i)})).collect::<Vec<_>>(),
                }))?;
            } else {
                io.line(lambda.to_string())?;
            }
            Ok(EXIT_OK)
        }
        Err(CobError::NotInImage) => {
            if io.json {
                io.value(&json!({"in_image": false, "error": "NotInImage"}))?;
            } else {
                io.line("NotInImage")?;
            }
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(e.into()),
    }
}

fn enumerate(io: &mut Io, spec: &EnumSpec, count_only: bool) -> Result<i32, Failure> {
    if count_only {
        let n = search::count(spec)?;
        if io.json {
            io.value(&json!({ "count": n }))?;
        } else {
            io.line(n.to_string())?;
        }
        return Ok(EXIT_OK);
    }
    if io.threads <= 1 {
        let mut result = Ok(());
        search::for_each(spec, |d| {
            if result.is_ok() {
                result = io.line(CoveringDocument::from(&d).to_json());
            }
        })?;
        result?;
    } else {
        for d in search::enumerate(spec, io.threads)? {
            io.line(CoveringDocument::from(&d).to_json())?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(io: &mut Io, k: usize, r_max: usize) -> Result<i32, Failure> {
    check_degree(k)?;
    let nonexistence = search::verify_nonexistence(k)?;
    let parity = search::verify_parity(k, r_max)?;
    let holds = nonexistence.holds() && parity.holds();
    if io.json {
        io.value(&json!({
            "k": k,
            "holds": holds,
            "nonexistence": nonexistence,
            "parity": {
                "r_max": r_max,
                "checked": parity.checked,
                "counterexamples": parity.counterexamples.len(),
            },
        }))?;
    } else {
        for (j, n) in &nonexistence.single_point {
            io.line(format!("one point of type {j}: {n}"))?;
        }
        for (j, h, n) in &nonexistence.mixed_pair {
            io.line(format!("two points of types {j},{h}: {n}"))?;
        }
        for (j, n) in &nonexistence.equal_pair {
            io.line(format!("two points of type {j}: {n}"))?;
        }
        for (r, n) in &parity.checked {
            io.line(format!("parity, {r} points: {n} checked"))?;
        }
        io.line(format!("parity counterexamples: {}", parity.counterexamples.len()))?;
        io.line(if holds { "verified" } else { "FAILED" })?;
    }
    Ok(if holds { EXIT_OK } else { EXIT_NEGATIVE })
}
