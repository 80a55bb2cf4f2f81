// Command-line front end; filled in as the library lands.
int main() { return 64; }
