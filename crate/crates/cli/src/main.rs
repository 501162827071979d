use clap::Parser;

fn main() {
    let cli = pps_cli::Cli::parse();
    std::process::exit(pps_cli::run(cli));
}
