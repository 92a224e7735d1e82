use std::io::Write;

fn main() {
    let (code, out) = superfn::cli::run(std::env::args_os());
    if !out.is_empty() {
        // A closed pipe is not an error for a batch tool.
        let _ = if code <= 1 {
            writeln!(std::io::stdout(), "{out}")
        } else {
            writeln!(std::io::stderr(), "{out}")
        };
    }
    std::process::exit(code);
}
