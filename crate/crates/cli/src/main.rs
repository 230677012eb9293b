use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use clap::Parser;
use compel_cli::{execute, Cli};

const EXIT_ASSERTION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let timeout = cli.global.timeout_secs.map(Duration::from_secs);
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(execute(&cli, &echo));
    });
    let result = match timeout {
        Some(t) => match rx.recv_timeout(t) {
            Ok(r) => r,
            Err(_) => {
                eprintln!("error: timed out after {} s", t.as_secs());
                return ExitCode::from(EXIT_TIMEOUT);
            }
        },
        None => rx.recv().expect("worker thread exited without a result"),
    };
    match result {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", outcome.output);
            if outcome.failed {
                ExitCode::from(EXIT_ASSERTION)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
