"""Expression parsing, text formats and command reports"""
