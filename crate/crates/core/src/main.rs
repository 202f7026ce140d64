use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tropical_rating::cli::{run, RunConfig};

/// Rate alternatives from pairwise comparison matrices.
#[derive(Debug, Parser)]
#[command(name = "troprate", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    run: RunConfig,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Start the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Keep problems as JSON files in this directory.
        #[arg(long, value_name = "DIR")]
        persist: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Some(Command::Serve { port, host, persist }) => serve(SocketAddr::new(host, port), persist),
        None => run(&cli.run).map(|report| print!("{report}")),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("troprate: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn serve(addr: SocketAddr, persist: Option<PathBuf>) -> tropical_rating::Result<()> {
    let runtime = tokio::runtime::Runtime::new().map_err(|e| tropical_rating::Error::Io(e.to_string()))?;
    runtime.block_on(tropical_rating::service::serve(addr, persist))
}
