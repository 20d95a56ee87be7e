fn main() {
    std::process::exit(binomci::cli::run(std::env::args_os()));
}
