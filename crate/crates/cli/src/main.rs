use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use unalg::closure::{self, nondensity_certificate, SubEq};
use unalg::gset::Perm;
use unalg::overalgebra::{self, OveralgebraResult};
use unalg::partition::{bell, Partition};
use unalg::{io, Caps, GroupAction, UnaryAlgebra};

#[derive(Parser)]
#[command(
    name = "unalg",
    version,
    about = "Congruence lattices of finite unary algebras"
)]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Largest n for lambda/rho searches.
    #[arg(long, global = true, value_parser = positive)]
    lambda_n: Option<usize>,
    /// Largest enumerated group order.
    #[arg(long, global = true, value_parser = positive)]
    group_order: Option<usize>,
    /// Largest generated carrier.
    #[arg(long, global = true, value_parser = positive)]
    point_count: Option<usize>,
    /// Largest congruence lattice.
    #[arg(long, global = true, value_parser = positive)]
    con_size: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(v) = self.lambda_n {
            caps.lambda_n = v;
        }
        if let Some(v) = self.group_order {
            caps.group_order = v;
        }
        if let Some(v) = self.point_count {
            caps.point_count = v;
        }
        if let Some(v) = self.con_size {
            caps.con_size = v;
        }
        caps
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("expected a positive integer, found {s:?}")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the congruence lattice of an algebra file.
    Con {
        file: PathBuf,
        /// Write the Hasse diagram as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Closed/dense status of the sublattice generated by some partitions.
    Closure {
        #[arg(long)]
        size: usize,
        /// Semicolon-separated partitions such as "|0,1|2|;|0|1,2|".
        #[arg(long, allow_hyphen_values = true)]
        partitions: String,
        /// Also report the non-density certificate of the abstract lattice.
        #[arg(long)]
        check_dense: bool,
        /// Print lambda of the sublattice as an algebra file.
        #[arg(long)]
        emit_lambda: bool,
    },
    /// Emit a group action as an algebra file.
    Gset {
        #[command(subcommand)]
        action: GsetCommand,
    },
    /// Construction I: one copy per tie-point.
    Overalgebra1 {
        file: PathBuf,
        #[arg(long)]
        ties: String,
        #[command(flatten)]
        opts: OverArgs,
    },
    /// Construction I over groups of tie-points with one collapsing op per group.
    OveralgebraXo {
        file: PathBuf,
        #[arg(long)]
        groups: String,
        #[command(flatten)]
        opts: OverArgs,
    },
    /// Construction II over pairs a:b.
    Overalgebra2 {
        file: PathBuf,
        #[arg(long)]
        pairs: String,
        #[command(flatten)]
        opts: OverArgs,
    },
    /// Construction III over pairs a:b with 2q+1 runs.
    Overalgebra3 {
        file: PathBuf,
        #[arg(long)]
        pairs: String,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[command(flatten)]
        opts: OverArgs,
    },
    /// Lattice files and catalog entries.
    Lattice {
        #[command(subcommand)]
        action: LatticeCommand,
    },
}

#[derive(Subcommand)]
enum GsetCommand {
    /// Right-regular action on the group elements.
    Regular {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Action on the left cosets of a subgroup.
    Coset {
        #[command(flatten)]
        group: GroupArgs,
        /// Subgroup generators; empty for the trivial subgroup.
        #[arg(long, default_value = "")]
        sub: String,
    },
    /// The permutation action on the points.
    Perm {
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Semicolon-separated 0-offset cycle strings.
    #[arg(long)]
    gens: String,
    /// Number of points; defaults to one more than the largest point named.
    #[arg(long)]
    degree: Option<usize>,
    /// Write the algebra here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OverArgs {
    /// Check every fiber against its predicted size and closed forms.
    #[arg(long)]
    verify: bool,
    /// Write the Hasse diagram of Con as DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the overalgebra as an algebra file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Decide whether two lattice files are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Print a catalog entry or lattice file.
    Show {
        /// Catalog name such as "L7" or "Eq(4)", or a lattice file.
        target: String,
        /// Print DOT instead of the lattice format.
        #[arg(long)]
        dot: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn read_algebra(path: &Path) -> Result<UnaryAlgebra> {
    io::parse_algebra(&read(path)?).with_context(|| path.display().to_string())
}

fn infer_degree(gens: &str) -> usize {
    gens.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .map_or(1, |m| m + 1)
}

fn cmd_con(file: &Path, dot: Option<&Path>, caps: &Caps) -> Result<String> {
    let alg = read_algebra(file)?;
    let con = alg.con_lattice_with(caps)?;
    let sorted = io::sorted_congruences(&con);
    let mut out = format!(
        "# algebra {}: {} points, {} ops\n# congruences {}\n",
        alg.name(),
        alg.size(),
        alg.ops().len(),
        con.len()
    );
    out.push_str(&io::con_listing(&con));
    let position: Vec<usize> = {
        let mut pos = vec![0; con.len()];
        for (i, p) in sorted.iter().enumerate() {
            pos[con.index_of(p).expect("listed congruence")] = i;
        }
        pos
    };
    let lattice = con.to_lattice();
    let mut covers: Vec<(usize, usize)> = lattice
        .covers()
        .into_iter()
        .map(|(a, b)| (position[a], position[b]))
        .collect();
    covers.sort_unstable();
    for (a, b) in covers {
        let _ = writeln!(out, "cover {a} {b}");
    }
    let names = unalg::catalog::identify(&lattice, caps.iso)?;
    if !names.is_empty() {
        let _ = writeln!(out, "# isomorphic to {}", names.join(", "));
    }
    if let Some(path) = dot {
        write(path, &io::con_dot(alg.name(), &con))?;
    }
    Ok(out)
}

fn cmd_closure(
    size: usize,
    partitions: &str,
    check_dense: bool,
    emit_lambda: bool,
    caps: &Caps,
) -> Result<String> {
    let gens = partitions
        .split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| Partition::parse_sized(p, size))
        .collect::<unalg::Result<Vec<_>>>()?;
    let l = SubEq::generated(size, &gens)?;
    let lam = closure::lambda(&l, caps)?;
    let closed_up = closure::rho(&lam, caps)?;
    let closed = closed_up == l;
    let dense = bell(size).is_some_and(|b| closed_up.len() as u128 == b);
    let verdict = match (closed, dense) {
        (true, true) => "CLOSED DENSE",
        (true, false) => "CLOSED",
        (false, true) => "DENSE",
        (false, false) => "NEITHER",
    };
    let mut out = format!("{verdict}\n");
    let _ = writeln!(out, "# sublattice {}", l.len());
    if gens.len() != l.len() {
        let _ = writeln!(out, "# generated from {} partitions", gens.len());
    }
    let _ = writeln!(out, "# closure {}", closed_up.len());
    let _ = writeln!(out, "# lambda maps {}", lam.len());
    if check_dense {
        let v = nondensity_certificate(&l.to_lattice()?);
        let _ = writeln!(
            out,
            "# certificate: not densely embeddable {}",
            v.not_densely_embeddable()
        );
        if let Some((a, b)) = v.ideal_filter_witness {
            let _ = writeln!(out, "# ideal/filter witness {a} {b}");
        }
        let _ = writeln!(out, "# meet semidistributive {}", v.meet_semidistributive);
        let _ = writeln!(out, "# meet primes {:?}", v.meet_primes);
    }
    if emit_lambda {
        out.push_str(&io::write_algebra(&lam.to_algebra("lambda")));
    }
    Ok(out)
}

fn cmd_gset(action: &GsetCommand, caps: &Caps) -> Result<String> {
    let group = match action {
        GsetCommand::Regular { group } | GsetCommand::Coset { group, .. } => group,
        GsetCommand::Perm { group } => group,
    };
    let degree = group.degree.unwrap_or_else(|| infer_degree(&group.gens));
    let action_group =
        GroupAction::with_cap(Perm::parse_list(&group.gens, degree)?, caps.group_order)?;
    let alg = match action {
        GsetCommand::Regular { .. } => action_group.regular_action()?,
        GsetCommand::Coset { sub, .. } => {
            let sub = Perm::parse_list(sub, degree)?;
            action_group.coset_action(&sub, caps)?
        }
        GsetCommand::Perm { .. } => action_group.to_algebra(),
    };
    let text = io::write_algebra(&alg);
    match &group.out {
        Some(path) => {
            write(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn cmd_overalgebra(result: OveralgebraResult, opts: &OverArgs, caps: &Caps) -> Result<String> {
    let alg = &result.algebra;
    let mut out = format!(
        "# {:?} over {}: {} points, {} ops, {} copies\n",
        result.construction,
        result.base.name(),
        alg.size(),
        alg.ops().len(),
        result.copy_count()
    );
    for c in 0..result.copy_count() {
        let labels: Vec<String> = result
            .copy_labels(c)
            .iter()
            .map(|l| l.to_string())
            .collect();
        let _ = writeln!(out, "copy {c}: {}", labels.join(" "));
    }
    let con = alg.con_lattice_with(caps)?;
    let _ = writeln!(out, "congruences {}", con.len());
    if opts.verify {
        let report = overalgebra::verify_fibers(&result, caps)?;
        for f in &report.fibers {
            let flag = |b: Option<bool>| match b {
                Some(true) => "yes",
                Some(false) => "no",
                None => "-",
            };
            let _ = writeln!(
                out,
                "fiber {} size {} predicted {} match {} star {} hat {}",
                f.theta,
                f.fiber_size,
                f.predicted_size.map_or("-".into(), |p| p.to_string()),
                flag(f.matches_prediction),
                flag(Some(f.star_formula_holds)),
                flag(f.hat_formula_holds),
            );
        }
        out.push_str(if report.all_hold() {
            "VERIFIED\n"
        } else {
            "FAILED\n"
        });
    }
    if let Some(path) = &opts.dot {
        write(path, &io::con_dot(alg.name(), &con))?;
    }
    if let Some(path) = &opts.out {
        write(path, &io::write_algebra(alg))?;
    }
    Ok(out)
}

fn load_lattice(target: &str) -> Result<(String, unalg::FiniteLattice)> {
    let path = Path::new(target);
    if path.is_file() {
        Ok(io::parse_lattice(&read(path)?).with_context(|| target.to_string())?)
    } else {
        Ok((target.to_string(), unalg::catalog(target)?))
    }
}

fn cmd_lattice(action: &LatticeCommand, caps: &Caps) -> Result<String> {
    match action {
        LatticeCommand::Iso { a, b } => {
            let (_, la) = io::parse_lattice(&read(a)?)?;
            let (_, lb) = io::parse_lattice(&read(b)?)?;
            let iso = la.isomorphism_capped(&lb, caps.iso)?.is_some();
            Ok(if iso {
                "ISOMORPHIC\n"
            } else {
                "NOT ISOMORPHIC\n"
            }
            .to_string())
        }
        LatticeCommand::Show { target, dot } => {
            let (name, l) = load_lattice(target)?;
            Ok(if *dot {
                io::lattice_dot(&name, &l)
            } else {
                io::write_lattice(&name, &l)
            })
        }
    }
}

fn run(cli: &Cli) -> Result<String> {
    let caps = cli.caps.caps();
    match &cli.command {
        Command::Con { file, dot } => cmd_con(file, dot.as_deref(), &caps),
        Command::Closure {
            size,
            partitions,
            check_dense,
            emit_lambda,
        } => cmd_closure(*size, partitions, *check_dense, *emit_lambda, &caps),
        Command::Gset { action } => cmd_gset(action, &caps),
        Command::Overalgebra1 { file, ties, opts } => {
            let base = read_algebra(file)?;
            let r = overalgebra::build_i(&base, &io::parse_usize_list(ties)?, &caps)?;
            cmd_overalgebra(r, opts, &caps)
        }
        Command::OveralgebraXo { file, groups, opts } => {
            let base = read_algebra(file)?;
            let r = overalgebra::build_xo(&base, &io::parse_groups(groups)?, &caps)?;
            cmd_overalgebra(r, opts, &caps)
        }
        Command::Overalgebra2 { file, pairs, opts } => {
            let base = read_algebra(file)?;
            let r = overalgebra::build_ii(&base, &io::parse_pairs(pairs)?, &caps)?;
            cmd_overalgebra(r, opts, &caps)
        }
        Command::Overalgebra3 {
            file,
            pairs,
            q,
            opts,
        } => {
            let base = read_algebra(file)?;
            let r = overalgebra::build_iii(&base, &io::parse_pairs(pairs)?, *q, &caps)?;
            cmd_overalgebra(r, opts, &caps)
        }
        Command::Lattice { action } => cmd_lattice(action, &caps),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<unalg::Error>() {
        Some(unalg::Error::Cap { .. }) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
