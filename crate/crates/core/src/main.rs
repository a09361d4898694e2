use std::io::Write;

fn main() {
    let rel_tol = std::env::var(eisen::cli::REL_TOL_ENV).ok();
    let out = eisen::cli::run(std::env::args_os(), rel_tol.as_deref());
    std::io::stdout().write_all(out.stdout.as_bytes()).ok();
    std::io::stderr().write_all(out.stderr.as_bytes()).ok();
    std::process::exit(out.code);
}
