use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let res = knit_cli::run(std::env::args_os());
    for d in &res.diagnostics {
        eprintln!("note: {d}");
    }
    let text = res.text.trim_end();
    // a closed pipe downstream (e.g. `| head`) is not an error
    let _ = if res.payload.get("error").is_some() {
        writeln!(std::io::stderr(), "{text}")
    } else {
        writeln!(std::io::stdout(), "{text}")
    };
    ExitCode::from(res.exit_code as u8)
}
