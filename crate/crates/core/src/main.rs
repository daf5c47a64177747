fn main() {
    let (code, out) = intdiff::cli::run_command(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
