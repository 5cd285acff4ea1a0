mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use render::Format;

/// Local functions, closure topologies and anti-ideals on groups and rings.
#[derive(Parser, Debug)]
#[command(name = "idealtop", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "IDEALTOP_FORMAT", default_value = "text")]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Elements, element orders and subgroups of a finite group.
    Group(GroupArgs),
    /// Members of an ideal, optionally testing one set.
    Ideal(IdealArgs),
    /// The local function A^∝ with a per-element trace.
    Localfn(SetArgs),
    /// The closure ζ(A) = A ∪ A^∝.
    Closure(SetArgs),
    /// Open sets of the topology induced by an ideal.
    Topology(TopologyArgs),
    /// Anti-ideal checks and the anti-local operator.
    #[command(subcommand)]
    Anti(AntiCommand),
    /// Piecewise-polynomial functions on [0, 1].
    #[command(subcommand)]
    Pwpoly(PwpolyCommand),
    /// Run the claim suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// `cyclic:4`, `klein4`, `sym:3`, `prod(cyclic:2,cyclic:3)`.
    #[arg(long)]
    group: String,
    /// Include the Cayley table.
    #[arg(long)]
    table: bool,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// A group spec or `Z`.
    #[arg(long)]
    group: String,
    /// `fin`, `all`, `empty`, `avoid:e`, `fam:{...}`, `gen:{...}`.
    #[arg(long)]
    ideal: String,
    /// Report whether this set is a member.
    #[arg(long)]
    set: Option<String>,
}

#[derive(Args, Debug)]
struct SetArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    ideal: String,
    /// `{e,a}` on a finite group; `2Z`, `2Z+1|{0}`, `Z\{0}` on Z.
    #[arg(long)]
    set: String,
}

#[derive(Args, Debug)]
struct TopologyArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    ideal: String,
}

#[derive(Subcommand, Debug)]
enum AntiCommand {
    /// Test the two anti-ideal conditions on a finite family of ring elements.
    Check {
        /// `int`, `zn:4`, `powerset:3`, `powerset(cyclic:2)`, `pwpoly`.
        #[arg(long)]
        ring: String,
        /// `{3,5,7}`, `{ {1},{2} }`, `xa:1/2,ya:1/2`.
        #[arg(long)]
        set: String,
        /// Skip a = b in the difference condition.
        #[arg(long)]
        strict_pairs: bool,
    },
    /// The anti-local operator A^{a∝} under one or all semantics.
    Local {
        #[arg(long)]
        group: String,
        /// A family of subsets, `{ {0},{2} }`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        set: String,
        /// `stated`, `cyclic`, `cyclic-global-identity` or `all`.
        #[arg(long, default_value = "stated")]
        semantics: String,
    },
    /// Compare the anti-ideal test with the proper-subset/union
    /// characterization on every small family in 2^{1..n}.
    Scan {
        #[arg(long, default_value_t = 3)]
        universe: usize,
        #[arg(long, default_value_t = 3)]
        max_family: usize,
        #[arg(long)]
        strict_pairs: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PwpolyCommand {
    /// Values at given points.
    Eval {
        /// `xa:1/2`, `ya:1/4`, `const:3/2`, `zero`; products with `*`.
        #[arg(long = "fn")]
        function: String,
        /// Comma-separated rationals in [0, 1].
        #[arg(long, value_delimiter = ',')]
        at: Vec<String>,
    },
    /// Pieces and equally spaced samples.
    Dump {
        #[arg(long = "fn")]
        function: String,
        #[arg(long, default_value_t = 5)]
        points: usize,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run only these claims (repeatable).
    #[arg(long)]
    claim: Vec<String>,
    /// List the registered claims without running them.
    #[arg(long)]
    list: bool,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Generated ideals per group above the enumeration order.
    #[arg(long)]
    samples: Option<usize>,
    /// Witnesses kept per claim.
    #[arg(long)]
    max_witnesses: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json { Format::Json } else { cli.format };
    match commands::run(&cli.command, format) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
