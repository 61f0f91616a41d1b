from django.urls import path, include
from rest_framework.routers import DefaultRouter

from .views import BenchmarkRunViewSet, TimingResultViewSet

router = DefaultRouter()
router.register(r'runs', BenchmarkRunViewSet, basename='run')
router.register(r'timings', TimingResultViewSet, basename='timing')

app_name = 'benchmarks'

urlpatterns = [
    path('', include(router.urls)),
]
