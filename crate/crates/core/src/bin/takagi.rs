use clap::Parser;

use takagi_core::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    std::process::exit(run(cli, &mut out, &mut err));
}
