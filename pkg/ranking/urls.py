from django.urls import path

from .views import sort_points, switch_interval_view

app_name = 'ranking'

urlpatterns = [
    path('sort/', sort_points, name='sort'),
    path('switch-interval/', switch_interval_view, name='switch-interval'),
]
