fn main() {
    std::process::exit(fockwc::cli::run(std::env::args_os()));
}
