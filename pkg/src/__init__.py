# AdS 이차곡면 모형의 BTZ 인과 구조 계산 라이브러리
