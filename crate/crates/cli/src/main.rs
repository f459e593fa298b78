use clap::Parser;
use std::io::Write;
use tauto_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let report = run(&cli);
    let code = report.exit_code();
    let mut out = std::io::stdout().lock();
    if cli.json {
        let _ = out.write_all(report.to_json().as_bytes());
    } else if report.outcome.is_err() {
        eprint!("{}", report.to_text());
    } else {
        let _ = out.write_all(report.to_text().as_bytes());
    }
    let _ = out.flush();
    std::process::exit(code);
}
