fn main() {
    std::process::exit(circdict::cli::run(std::env::args_os()));
}
