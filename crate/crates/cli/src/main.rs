use clap::Parser;
use semiunital_cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = execute(&cli);
    let text = if cli.human { outcome.render_human() } else { outcome.render() };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                std::process::exit(2);
            }
        }
        None => print!("{text}"),
    }
    std::process::exit(outcome.exit);
}
