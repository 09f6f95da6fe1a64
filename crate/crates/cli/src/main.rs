use clap::Parser;

fn main() {
    let cli = gsp4kit_cli::Cli::parse();
    gsp4kit_core::par::configure_threads();
    if let Err(e) = gsp4kit_cli::run(&cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
