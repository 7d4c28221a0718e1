fn main() {
    std::process::exit(aalpha::cli::run(std::env::args_os()));
}
