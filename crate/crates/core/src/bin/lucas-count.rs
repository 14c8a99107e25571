fn main() {
    std::process::exit(lucas_count::cli::run(std::env::args_os()));
}
