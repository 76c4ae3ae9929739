"""
CLI Layer
명령행 진입점 (argparse) 과 출력 렌더링
"""
