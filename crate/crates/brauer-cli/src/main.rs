use std::process::ExitCode;

use clap::Parser;

use brauer_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    if cli.json {
                        eprintln!("{}", serde_json::json!({ "error": "check", "message": msg }));
                    } else {
                        eprintln!("error: {msg}");
                    }
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            if cli.json {
                eprintln!("{}", e.to_json());
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
