use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = toeplitz_minors::cli::run(std::env::args().skip(1), &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
