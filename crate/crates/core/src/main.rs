use clap::Parser;
use stdpairs::cli_io::commands::{exit_code, run, Cli};

fn main() {
    let cli = Cli::parse();
    let level = if cli.global.quiet { "warn" } else { "info" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(&cli) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
