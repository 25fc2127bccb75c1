use clap::Parser;

use dcpoly_cli::commands::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
