use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use prym2::checks::{run_all, run_single, CHECK_IDS};
use prym2::chern::{chern_component, sym_roots, ChernBasis};
use prym2::pipeline::{assemble_final_ideal, envelope_components, envelope_pushforwards};
use prym2::poly::{work_ring, IntPoly};
use prym2::proj::s_to_h;

#[derive(Parser)]
#[command(
    name = "prym2",
    version,
    about = "Exact verification of the integral Chow ring of the moduli stack of genus-2 Prym pairs"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check and the final theorem verification
    Verify,
    /// Run a single check by id (see list-checks)
    Check { id: String },
    /// Print intermediate objects
    Dump {
        #[arg(value_enum)]
        what: DumpTarget,
    },
    /// List the ids of all registered checks
    ListChecks,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpTarget {
    /// Every envelope pushforward with provenance
    Envelope,
    /// Chern classes of the symmetric powers of the dual bundle
    Chern,
    /// Assembled relation ideal with per-generator provenance
    Ideal,
    /// The s -> h conversion table
    Sclasses,
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(move || run(cli)) {
        Ok(code) => code,
        Err(_) => ExitCode::from(2),
    }
}

fn report_exit(report: &prym2::report::VerificationReport) -> ExitCode {
    if report.all_pass() {
        ExitCode::SUCCESS
    } else if report.has_internal_error() {
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Verify => {
            let report = run_all();
            match cli.format {
                Format::Text => print!("{}", report.to_text(use_color())),
                Format::Json => println!("{}", report.to_json()),
            }
            report_exit(&report)
        }
        Command::Check { id } => match run_single(&id) {
            Ok(report) => {
                match cli.format {
                    Format::Text => print!("{}", report.to_text(use_color())),
                    Format::Json => println!("{}", report.to_json()),
                }
                report_exit(&report)
            }
            Err(unknown) => {
                eprintln!("{unknown}");
                ExitCode::from(2)
            }
        },
        Command::Dump { what } => match dump(what, cli.format) {
            Ok(out) => {
                print!("{out}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("internal error: {e}");
                ExitCode::from(2)
            }
        },
        Command::ListChecks => {
            match cli.format {
                Format::Text => {
                    for id in CHECK_IDS {
                        println!("{id}");
                    }
                }
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(CHECK_IDS).unwrap());
                }
            }
            ExitCode::SUCCESS
        }
    }
}

fn dump(what: DumpTarget, format: Format) -> Result<String, Box<dyn std::error::Error>> {
    use std::fmt::Write;
    let mut text = String::new();
    let mut entries: Vec<serde_json::Value> = Vec::new();
    match what {
        DumpTarget::Envelope => {
            for pf in envelope_pushforwards()? {
                writeln!(
                    text,
                    "{}: {} -> {}",
                    pf.component.as_str(),
                    pf.basis,
                    pf.class
                )?;
                entries.push(serde_json::json!({
                    "component": pf.component.as_str(),
                    "basis": pf.basis,
                    "pushforward": pf.class.to_string(),
                }));
            }
            for comp in envelope_components() {
                if let Some(reason) = comp.skip_reason {
                    writeln!(text, "{}: skipped ({reason})", comp.id.as_str())?;
                    entries.push(serde_json::json!({
                        "component": comp.id.as_str(),
                        "skipped": reason,
                    }));
                }
            }
        }
        DumpTarget::Chern => {
            for n in 1..=4usize {
                let spec = sym_roots(n, true);
                for i in 0..=spec.rank() {
                    let c = chern_component(&spec, i, ChernBasis::BetaGamma)?;
                    writeln!(text, "c{i}(Sym{n}(Vdual)) = {c}")?;
                    entries.push(serde_json::json!({
                        "bundle": format!("Sym{n}(Vdual)"),
                        "index": i,
                        "value": c.to_string(),
                    }));
                }
            }
        }
        DumpTarget::Ideal => {
            for (src, p) in assemble_final_ideal()?.generators {
                writeln!(text, "{p}  [{src}]")?;
                entries.push(serde_json::json!({
                    "generator": p.to_string(),
                    "provenance": src.to_string(),
                }));
            }
        }
        DumpTarget::Sclasses => {
            let ring = work_ring();
            let minus_b1 = -&IntPoly::var(ring, "b1");
            let b2 = IntPoly::var(ring, "b2");
            for r in 1..=4usize {
                for j in 0..=r {
                    let table = s_to_h(r, j)?
                        .substitute("c1", &minus_b1)?
                        .substitute("c2", &b2)?;
                    writeln!(text, "s_{r}^{j} = {table}")?;
                    entries.push(serde_json::json!({
                        "r": r,
                        "j": j,
                        "h_polynomial": table.to_string(),
                    }));
                }
            }
        }
    }
    Ok(match format {
        Format::Text => text,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&entries)?),
    })
}
