use clap::Parser;
use iaa_moderation::cli::{run, Cli};

fn main() {
    std::process::exit(run(&Cli::parse()));
}
