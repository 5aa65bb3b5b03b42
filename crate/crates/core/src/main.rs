fn main() {
    std::process::exit(rational_gauge::cli::run(std::env::args_os()));
}
