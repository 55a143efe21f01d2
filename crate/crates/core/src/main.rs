fn main() {
    std::process::exit(homlie::cli::run(std::env::args_os()));
}
