fn main() {
    std::process::exit(pinczon::cli::run(std::env::args_os()));
}
