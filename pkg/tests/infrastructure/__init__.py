# Infrastructure tests package
