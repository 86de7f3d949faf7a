//! Command-line surface: lattice file parsing, analysis and theorem runs,
//! multiplication enumeration, and DOT export.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 a refuted check was
//! encountered, 3 size-guard abort. Diagnostics go to the error stream, data
//! to the output stream; identical inputs produce byte-identical output.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::enumerate::{catalog_lattice, enumerate_multiplications, EnumerationJob, ENUM_SIZE_CAP};
use crate::error::Error;
use crate::invariants::{metrics, GraphMetrics};
use crate::lattice::{ElementSet, FiniteLattice};
use crate::mult::MultLattice;
use crate::rings::{with_meet_mult, with_trivial_mult, RingSpec};
use crate::theorems::{check_all, Verdict};
use crate::zdg::{gamma_meet, gamma_mult, Graph};

/// A parsed lattice file.
///
/// Line-oriented format: a `lattice <name>` header, one `elements ...` line,
/// `cover <a> <b>` relation lines (closure is taken, so covers or general
/// relations both work), and an optional multiplication given either as
/// `mult meet`, `mult trivial`, or explicit `prod <a> <b> <c>` lines
/// (meaning `a.b = c`) covering every unordered pair not forced by
/// `a.1 = a`. `#` begins a comment; blank lines are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFile {
    pub name: String,
    pub labels: Vec<String>,
    pub relations: Vec<(String, String)>,
    pub mult: MultSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultSpec {
    None,
    Meet,
    Trivial,
    Explicit(Vec<(String, String, String)>),
}

impl LatticeFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let err = |line: usize, msg: String| Error::Parse { line, msg };
        let mut name: Option<String> = None;
        let mut labels: Option<Vec<String>> = None;
        let mut relations = Vec::new();
        let mut mult = MultSpec::None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let known = |l: &str| -> Result<(), Error> {
                match &labels {
                    Some(ls) if ls.iter().any(|x| x == l) => Ok(()),
                    Some(_) => Err(err(line_no, format!("unknown label `{l}`"))),
                    None => Err(err(line_no, "elements line must come first".into())),
                }
            };
            match tokens[0] {
                "lattice" => {
                    if name.is_some() {
                        return Err(err(line_no, "duplicate lattice header".into()));
                    }
                    if tokens.len() != 2 {
                        return Err(err(line_no, "expected `lattice <name>`".into()));
                    }
                    name = Some(tokens[1].to_string());
                }
                "elements" => {
                    if labels.is_some() {
                        return Err(err(line_no, "duplicate elements line".into()));
                    }
                    if tokens.len() < 2 {
                        return Err(err(line_no, "expected `elements <label> ...`".into()));
                    }
                    labels = Some(tokens[1..].iter().map(|s| s.to_string()).collect());
                }
                "cover" => {
                    if tokens.len() != 3 {
                        return Err(err(line_no, "expected `cover <a> <b>`".into()));
                    }
                    known(tokens[1])?;
                    known(tokens[2])?;
                    relations.push((tokens[1].to_string(), tokens[2].to_string()));
                }
                "mult" => {
                    if mult != MultSpec::None {
                        return Err(err(line_no, "multiplication already declared".into()));
                    }
                    match tokens[..] {
                        [_, "meet"] => mult = MultSpec::Meet,
                        [_, "trivial"] => mult = MultSpec::Trivial,
                        _ => {
                            return Err(err(
                                line_no,
                                "expected `mult meet` or `mult trivial`".into(),
                            ))
                        }
                    }
                }
                "prod" => {
                    if tokens.len() != 4 {
                        return Err(err(line_no, "expected `prod <a> <b> <c>`".into()));
                    }
                    for t in &tokens[1..] {
                        known(t)?;
                    }
                    match &mut mult {
                        MultSpec::None => {
                            mult = MultSpec::Explicit(vec![(
                                tokens[1].to_string(),
                                tokens[2].to_string(),
                                tokens[3].to_string(),
                            )])
                        }
                        MultSpec::Explicit(prods) => prods.push((
                            tokens[1].to_string(),
                            tokens[2].to_string(),
                            tokens[3].to_string(),
                        )),
                        _ => {
                            return Err(err(
                                line_no,
                                "prod lines cannot mix with a mult keyword".into(),
                            ))
                        }
                    }
                }
                other => return Err(err(line_no, format!("unknown directive `{other}`"))),
            }
        }
        let name = name.ok_or_else(|| Error::Invalid("missing `lattice <name>` header".into()))?;
        let labels = labels.ok_or_else(|| Error::Invalid("missing `elements` line".into()))?;
        Ok(LatticeFile {
            name,
            labels,
            relations,
            mult,
        })
    }

    /// Canonical text form: whitespace normalized, content preserved.
    pub fn serialize(&self) -> String {
        let mut out = format!("lattice {}\n", self.name);
        out.push_str(&format!("elements {}\n", self.labels.join(" ")));
        for (a, b) in &self.relations {
            out.push_str(&format!("cover {a} {b}\n"));
        }
        match &self.mult {
            MultSpec::None => {}
            MultSpec::Meet => out.push_str("mult meet\n"),
            MultSpec::Trivial => out.push_str("mult trivial\n"),
            MultSpec::Explicit(prods) => {
                for (a, b, c) in prods {
                    out.push_str(&format!("prod {a} {b} {c}\n"));
                }
            }
        }
        out
    }

    /// Validates and builds the lattice, and the multiplication when one is
    /// declared.
    pub fn build(&self) -> Result<(FiniteLattice, Option<MultLattice>), Error> {
        let labels: Vec<&str> = self.labels.iter().map(|s| s.as_str()).collect();
        let relations: Vec<(&str, &str)> = self
            .relations
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let lattice = FiniteLattice::build(&labels, &relations)?;
        let mult = match &self.mult {
            MultSpec::None => None,
            MultSpec::Meet => Some(with_meet_mult(&lattice)?),
            MultSpec::Trivial => Some(with_trivial_mult(&lattice)?),
            MultSpec::Explicit(prods) => Some(self.build_explicit(&lattice, prods)?),
        };
        Ok((lattice, mult))
    }

    fn build_explicit(
        &self,
        l: &FiniteLattice,
        prods: &[(String, String, String)],
    ) -> Result<MultLattice, Error> {
        let n = l.n();
        let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
        for (a, b, c) in prods {
            let ia = l.index_of(a).expect("checked at parse");
            let ib = l.index_of(b).expect("checked at parse");
            let ic = l.index_of(c).expect("checked at parse");
            if table[ia][ib].is_some() {
                return Err(Error::DuplicateProduct {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
            table[ia][ib] = Some(ic);
            table[ib][ia] = Some(ic);
        }
        // cells with top default via a.1 = a; everything else must be given
        for i in 0..n {
            if table[i][l.top()].is_none() {
                table[i][l.top()] = Some(i);
                table[l.top()][i] = Some(i);
            }
        }
        for i in 0..n {
            for j in i..n {
                if table[i][j].is_none() {
                    return Err(Error::MissingProduct {
                        a: l.label(i).to_string(),
                        b: l.label(j).to_string(),
                    });
                }
            }
        }
        let full: Vec<Vec<usize>> = table
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.unwrap()).collect())
            .collect();
        MultLattice::attach(l.clone(), full)
    }
}

#[derive(Parser)]
#[command(
    name = "multlat",
    about = "Zero-divisor graphs and exact invariants of finite multiplicative lattices",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a lattice file; print structure, zero divisors,
    /// minimal primes, and both graphs' metrics
    Analyze { file: PathBuf },
    /// Analyze the ideal lattice of Z_n, or of a product of several factors
    Ring {
        n: u64,
        /// Additional factor moduli for a direct product
        #[arg(long, num_args = 1.., value_name = "N")]
        product: Vec<u64>,
    },
    /// Run every theorem check; one line per result
    Theorems {
        file: Option<PathBuf>,
        #[arg(long, value_name = "N", conflicts_with = "file")]
        ring: Option<u64>,
        #[arg(long, num_args = 1.., value_name = "N", requires = "ring")]
        product: Vec<u64>,
    },
    /// Enumerate all multiplications on a catalog lattice
    Enumerate {
        #[arg(long)]
        catalog: String,
        /// Stop after this many instances
        #[arg(long)]
        limit: Option<usize>,
        /// Run the theorem suite over each instance and tally refutations
        #[arg(long)]
        report: bool,
        /// Override the base-lattice size cap
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Write a zero-divisor graph in DOT format
    ExportDot {
        file: Option<PathBuf>,
        #[arg(long, value_name = "N", conflicts_with = "file")]
        ring: Option<u64>,
        #[arg(long, num_args = 1.., value_name = "N", requires = "ring")]
        product: Vec<u64>,
        /// Which graph to export
        #[arg(long, value_enum, default_value_t = GraphKind::Mult)]
        graph: GraphKind,
        #[arg(short = 'o', value_name = "PATH")]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Meet,
    Mult,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => 3,
        _ => 1,
    }
}

/// Runs the CLI against the given argv (including the program name),
/// writing data to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text; help requests are not errors
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 1;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let result = match cli.cmd {
        Cmd::Analyze { file } => cmd_analyze(&file, out),
        Cmd::Ring { n, product } => cmd_ring(n, &product, out),
        Cmd::Theorems {
            file,
            ring,
            product,
        } => cmd_theorems(file.as_deref(), ring, &product, out),
        Cmd::Enumerate {
            catalog,
            limit,
            report,
            cap,
        } => cmd_enumerate(&catalog, limit, report, cap, out),
        Cmd::ExportDot {
            file,
            ring,
            product,
            graph,
            output,
        } => cmd_export_dot(file.as_deref(), ring, &product, graph, &output, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn read_lattice_file(path: &Path) -> Result<LatticeFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    LatticeFile::parse(&text)
}

fn ring_instance(n: u64, extra: &[u64]) -> Result<(String, MultLattice), Error> {
    let mut moduli = vec![n];
    moduli.extend_from_slice(extra);
    let name = moduli
        .iter()
        .map(|m| format!("Id(Z_{m})"))
        .collect::<Vec<_>>()
        .join(" x ");
    let m = RingSpec::new(moduli).build()?;
    Ok((name, m))
}

fn set_labels(l: &FiniteLattice, s: &ElementSet) -> String {
    let items: Vec<&str> = s.indices().iter().map(|&i| l.label(i)).collect();
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(" ")
    }
}

fn metrics_line(kind: &str, mt: &GraphMetrics) -> String {
    let solver = |v: Option<usize>| v.map_or("skipped".to_string(), |x| x.to_string());
    format!(
        "graph {kind}: vertices={} edges={} connected={} diameter={} girth={} bipartite={} complete-bipartite={} clique={} chromatic={} star={}",
        mt.vertex_count,
        mt.edge_count,
        mt.connected,
        mt.diameter,
        mt.girth,
        mt.bipartite,
        mt.complete_bipartite,
        solver(mt.clique_number),
        solver(mt.chromatic_number),
        mt.is_star
    )
}

fn print_analysis(
    name: &str,
    l: &FiniteLattice,
    m: Option<&MultLattice>,
    mult_desc: &str,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let w = |e: std::io::Error| Error::Io(format!("write failed: {e}"));
    writeln!(
        out,
        "lattice {name}: n={} bottom={} top={}",
        l.n(),
        l.label(l.bottom()),
        l.label(l.top())
    )
    .map_err(w)?;
    writeln!(out, "atoms: {}", set_labels(l, &l.atoms())).map_err(w)?;
    writeln!(out, "0-distributive: {}", l.is_0_distributive()).map_err(w)?;
    let search = l.minimal_prime_ideals_capped(crate::lattice::SUBSET_ENUM_CAP);
    let rendered: Vec<String> = search
        .ideals
        .iter()
        .map(|s| {
            let items: Vec<&str> = s.indices().iter().map(|&i| l.label(i)).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    writeln!(
        out,
        "minimal prime ideals{}: {}",
        if search.exhaustive {
            ""
        } else {
            " (principal search)"
        },
        if rendered.is_empty() {
            "(none)".to_string()
        } else {
            rendered.join(" ")
        }
    )
    .map_err(w)?;
    writeln!(out, "multiplication: {mult_desc}").map_err(w)?;

    let zero = ElementSet::from_indices(l.n(), &[l.bottom()]);
    let g = gamma_meet(l, &zero).expect("the zero ideal is an ideal");
    writeln!(out, "{}", metrics_line("meet", &metrics(&g))).map_err(w)?;

    if let Some(m) = m {
        writeln!(out, "reduced: {}", m.is_reduced()).map_err(w)?;
        writeln!(out, "nilpotents: {}", set_labels(l, &m.nil_set())).map_err(w)?;
        let zd = m.zero_divisors();
        writeln!(out, "zero-divisors: {}", set_labels(l, &zd.z_star)).map_err(w)?;
        writeln!(out, "Z(L) is ideal: {}", zd.z_is_ideal).map_err(w)?;
        writeln!(
            out,
            "prime elements: {}",
            set_labels(l, &m.prime_elements())
        )
        .map_err(w)?;
        writeln!(
            out,
            "minimal prime elements: {}",
            set_labels(l, &m.minimal_prime_elements())
        )
        .map_err(w)?;
        let gm = gamma_mult(m, l.bottom());
        writeln!(out, "{}", metrics_line("mult", &metrics(&gm))).map_err(w)?;
    }
    Ok(0)
}

fn cmd_analyze(path: &Path, out: &mut dyn Write) -> Result<i32, Error> {
    let doc = read_lattice_file(path)?;
    let (l, m) = doc.build()?;
    let desc = match &doc.mult {
        MultSpec::None => "none",
        MultSpec::Meet => "meet",
        MultSpec::Trivial => "trivial",
        MultSpec::Explicit(_) => "explicit",
    };
    print_analysis(&doc.name, &l, m.as_ref(), desc, out)
}

fn cmd_ring(n: u64, extra: &[u64], out: &mut dyn Write) -> Result<i32, Error> {
    let (name, m) = ring_instance(n, extra)?;
    print_analysis(&name, m.base(), Some(&m), "ideal product", out)
}

fn theorem_lines(m: &MultLattice, out: &mut dyn Write) -> Result<i32, Error> {
    let mut refuted = false;
    for r in check_all(m) {
        let witness = if r.witness.is_empty() {
            String::new()
        } else {
            format!(" witness={}", r.witness.join(","))
        };
        writeln!(out, "{} {}{}", r.theorem_id, r.verdict, witness)
            .map_err(|e| Error::Io(format!("write failed: {e}")))?;
        refuted |= r.verdict == Verdict::Refuted;
    }
    Ok(if refuted { 2 } else { 0 })
}

fn cmd_theorems(
    file: Option<&Path>,
    ring: Option<u64>,
    extra: &[u64],
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let m = match (file, ring) {
        (Some(path), None) => {
            let doc = read_lattice_file(path)?;
            let (_, m) = doc.build()?;
            m.ok_or_else(|| {
                Error::Invalid("file declares no multiplication; theorems need one".into())
            })?
        }
        (None, Some(n)) => ring_instance(n, extra)?.1,
        _ => {
            return Err(Error::Invalid(
                "give exactly one of <file> or --ring".into(),
            ))
        }
    };
    theorem_lines(&m, out)
}

fn cmd_enumerate(
    catalog: &str,
    limit: Option<usize>,
    report: bool,
    cap: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let base = catalog_lattice(catalog)
        .ok_or_else(|| Error::Invalid(format!("unknown catalog lattice `{catalog}`")))?;
    let job = EnumerationJob {
        base,
        limit,
        cap: cap.unwrap_or(ENUM_SIZE_CAP),
        partition_prefix: Vec::new(),
    };
    let w = |e: std::io::Error| Error::Io(format!("write failed: {e}"));
    let mut instances = 0usize;
    let mut refuted = 0usize;
    for (idx, m) in enumerate_multiplications(&job)?.enumerate() {
        instances += 1;
        if report {
            for r in check_all(&m) {
                if r.verdict == Verdict::Refuted {
                    refuted += 1;
                    writeln!(
                        out,
                        "refuted instance={idx} {} witness={}",
                        r.theorem_id,
                        r.witness.join(",")
                    )
                    .map_err(w)?;
                }
            }
        }
    }
    if report {
        writeln!(out, "instances={instances} refuted={refuted}").map_err(w)?;
        Ok(if refuted > 0 { 2 } else { 0 })
    } else {
        writeln!(out, "instances={instances}").map_err(w)?;
        Ok(0)
    }
}

/// DOT rendering: edges sorted lexicographically by label pair, then
/// isolated vertices as bare nodes, all identifiers quoted.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut edges: Vec<(String, String)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort();
    let mut isolated: Vec<String> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 0)
        .map(|v| g.label(v).to_string())
        .collect();
    isolated.sort();
    let mut s = String::from("graph G {\n");
    for (a, b) in edges {
        s.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    for v in isolated {
        s.push_str(&format!("  \"{v}\";\n"));
    }
    s.push_str("}\n");
    s
}

fn cmd_export_dot(
    file: Option<&Path>,
    ring: Option<u64>,
    extra: &[u64],
    kind: GraphKind,
    output: &Path,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    let (l, m) = match (file, ring) {
        (Some(path), None) => {
            let doc = read_lattice_file(path)?;
            doc.build()?
        }
        (None, Some(n)) => {
            let (_, m) = ring_instance(n, extra)?;
            (m.base().clone(), Some(m))
        }
        _ => {
            return Err(Error::Invalid(
                "give exactly one of <file> or --ring".into(),
            ))
        }
    };
    let g = match kind {
        GraphKind::Meet => {
            let zero = ElementSet::from_indices(l.n(), &[l.bottom()]);
            gamma_meet(&l, &zero)?
        }
        GraphKind::Mult => match &m {
            Some(m) => gamma_mult(m, l.bottom()),
            None => {
                return Err(Error::Invalid(
                    "file declares no multiplication; use --graph meet".into(),
                ))
            }
        },
    };
    std::fs::write(output, graph_to_dot(&g))
        .map_err(|e| Error::Io(format!("cannot write {}: {e}", output.display())))?;
    let _ = writeln!(err, "wrote {}", output.display());
    Ok(0)
}
