fn main() {
    std::process::exit(kappa_calculus::cli::run(std::env::args_os()));
}
