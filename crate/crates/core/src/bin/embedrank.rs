fn main() {
    std::process::exit(embedrank::cli::run(std::env::args_os()));
}
