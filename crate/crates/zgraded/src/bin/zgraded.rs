use std::io::Write;

fn main() {
    let (code, out) = zgraded::cli::cli_dispatch(std::env::args_os());
    print!("{out}");
    std::io::stdout().flush().ok();
    std::process::exit(code);
}
