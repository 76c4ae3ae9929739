# Services tests package
