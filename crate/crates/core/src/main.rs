fn main() {
    let outcome = qfrob::cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    std::process::exit(outcome.code);
}
