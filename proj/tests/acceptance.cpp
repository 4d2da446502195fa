// placeholder; filled in after the corpus counts are frozen
int main() { return 1; }
